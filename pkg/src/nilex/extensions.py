"""Central extensions ``A_θ = A ⊕ V`` and the quotient that undoes them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (
    DEFAULT_SEED,
    Algebra,
    annihilator,
    check_assosymmetric,
    is_one_generated,
    power_sequence,
    quotient_by_central_subspace,
)
from .cohomology import (
    AdmissibilityVerdict,
    BilinearForm,
    _require_cocycles,
    check_extension_admissible,
    cocycle_annihilator,
)
from .errors import DimensionMismatchError, FieldMismatchError, TrivialAnnihilatorError
from .linalg import Vector, intersect_subspaces, same_span, unit_vector


@dataclass(frozen=True)
class ExtensionSpec:
    base: Algebra
    cocycles: tuple[BilinearForm, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cocycles", tuple(self.cocycles))
        if not self.cocycles:
            raise ValueError("an extension needs at least one cocycle")
        for t in self.cocycles:
            if t.n != self.base.dim:
                raise DimensionMismatchError(f"form of size {t.n} on algebra of dimension {self.base.dim}")
            if t.field != self.base.field:
                raise FieldMismatchError(f"{t.field!r} vs {self.base.field!r}")
        if not self.names:
            m = self.base.dim
            object.__setattr__(self, "names", tuple(f"e{m + i + 1}" for i in range(len(self.cocycles))))

    @property
    def s(self) -> int:
        return len(self.cocycles)


def central_extension(spec: ExtensionSpec, check: bool = True, name: str | None = None) -> Algebra:
    """Build ``A_θ``; the new basis vectors come after the old ones.

    With ``check=False`` non-cocycles are accepted, which is only useful
    for demonstrating that the result then fails the identities.
    """
    a = spec.base
    if check:
        _require_cocycles(a, spec.cocycles)
    m, s = a.dim, spec.s
    n = m + s
    z = a.field.zero
    table = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(m):
        for j in range(m):
            cell = table[i][j]
            cell[:m] = a.table[i][j]
            for r, theta in enumerate(spec.cocycles):
                cell[m + r] = theta.matrix.rows[i][j]
    return Algebra(table, field=a.field, name=name, generator=a.generator)


def _embed(v: Sequence, n: int, field) -> Vector:
    return tuple(v) + (field.zero,) * (n - len(v))


@dataclass
class ExtensionReport:
    admissibility: AdmissibilityVerdict
    assosymmetric: bool
    nilpotent: bool
    one_generated: bool
    ann_dim: int
    ann_identity: bool
    flags: list[str] = field(default_factory=list)
    algebra: Algebra | None = None

    @property
    def ok(self) -> bool:
        return (
            self.admissibility.admissible
            and self.assosymmetric
            and self.nilpotent
            and self.one_generated
            and self.ann_identity
            and not self.flags
        )

    def to_dict(self) -> dict:
        return {
            "admissible": self.admissibility.admissible,
            "trivial_intersection": self.admissibility.trivial_intersection,
            "independent_in_H2": self.admissibility.independent_in_h2,
            "assosymmetric": self.assosymmetric,
            "nilpotent": self.nilpotent,
            "one_generated": self.one_generated,
            "ann_dim": self.ann_dim,
            "ann_identity": self.ann_identity,
            "flags": list(self.flags),
        }


def ann_identity_holds(spec: ExtensionSpec, ext: Algebra) -> bool:
    """``Ann(A_θ) = (Ann(θ) ∩ Ann(A)) ⊕ V`` as subspaces of ``A_θ``."""
    a = spec.base
    n = ext.dim
    inter = intersect_subspaces(cocycle_annihilator(a, spec.cocycles), annihilator(a), a.dim, a.field)
    expected = [_embed(v, n, a.field) for v in inter]
    expected += [unit_vector(a.dim + r, n, a.field) for r in range(spec.s)]
    return same_span(annihilator(ext), expected, n, a.field)


def validate_extension(spec: ExtensionSpec, seed: int = DEFAULT_SEED) -> ExtensionReport:
    verdict = check_extension_admissible(spec.base, spec.cocycles)
    ext = central_extension(spec)
    ann = annihilator(ext)
    flags = []
    if len(ann) > spec.s:
        flags.append(f"annihilator of dimension {len(ann)} exceeds the {spec.s} new vectors")
    return ExtensionReport(
        admissibility=verdict,
        assosymmetric=check_assosymmetric(ext).ok,
        nilpotent=power_sequence(ext).nilpotent,
        one_generated=bool(is_one_generated(ext, seed=seed)),
        ann_dim=len(ann),
        ann_identity=ann_identity_holds(spec, ext),
        flags=flags,
        algebra=ext,
    )


def recover_quotient(b: Algebra) -> Algebra:
    """``B / Ann(B)``; for a non-split central extension this is the base algebra."""
    ann = annihilator(b)
    if b.dim and not ann:
        raise TrivialAnnihilatorError(f"{b.name or 'algebra'} has trivial annihilator")
    q = quotient_by_central_subspace(b, ann)
    return q.renamed(f"{b.name}/Ann" if b.name else None)


__all__ = [
    "ExtensionReport",
    "ExtensionSpec",
    "ann_identity_holds",
    "central_extension",
    "recover_quotient",
    "validate_extension",
]
