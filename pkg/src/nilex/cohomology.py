"""Scalar second cohomology of assosymmetric algebras.

A bilinear form ``θ`` on ``A`` is a cocycle when, for all ``x, y, z``::

    θ(xy, z) - θ(x, yz) = θ(xz, y) - θ(x, zy)
    θ(xy, z) - θ(x, yz) = θ(yx, z) - θ(y, xz)

These are exactly the conditions under which ``A ⊕ V`` with product
``(x + x')(y + y') = xy + θ(x, y)`` is again assosymmetric.  Coboundaries
are the forms ``δf(x, y) = f(xy)``.  Vector-valued cocycles are handled as
lists of scalar forms, one per coordinate of ``V``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .algebra import PASS, Algebra, CheckResult, annihilator
from .errors import DimensionMismatchError, FieldMismatchError, NotACocycleError, NotInSpanError
from .fields import QQ, Field
from .linalg import (
    Echelon,
    Matrix,
    Vector,
    complement_in_span,
    intersect_subspaces,
    kernel_basis,
)


class BilinearForm:
    """An ``n x n`` matrix ``θ`` with ``θ(e_l, e_m)`` = entry ``(l, m)``."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix | Sequence[Sequence], field: Field | None = None):
        if not isinstance(matrix, Matrix):
            rows = [list(r) for r in matrix]
            matrix = Matrix(rows, ncols=len(rows), field=field) if rows else Matrix([], ncols=0, field=field or QQ)
        if matrix.nrows != matrix.ncols:
            raise DimensionMismatchError(f"bilinear form must be square, got {matrix.shape}")
        self.matrix = matrix

    @classmethod
    def zero(cls, n: int, field: Field = QQ) -> BilinearForm:
        return cls(Matrix.zeros(n, n, field))

    @classmethod
    def delta(cls, i: int, j: int, n: int, field: Field = QQ) -> BilinearForm:
        """``Δ_ij`` (1-based): the form with a single 1 at ``(i, j)``."""
        rows = [[field.zero] * n for _ in range(n)]
        rows[i - 1][j - 1] = field.one
        return cls(Matrix(rows, ncols=n, field=field))

    @classmethod
    def from_deltas(cls, terms: Mapping[tuple[int, int], object], n: int, field: Field = QQ) -> BilinearForm:
        rows = [[field.zero] * n for _ in range(n)]
        for (i, j), c in terms.items():
            rows[i - 1][j - 1] = rows[i - 1][j - 1] + field(c)
        return cls(Matrix(rows, ncols=n, field=field))

    @classmethod
    def from_vector(cls, v: Sequence, n: int, field: Field | None = None) -> BilinearForm:
        return cls(Matrix([v[i * n : (i + 1) * n] for i in range(n)], ncols=n, field=field))

    @property
    def n(self) -> int:
        return self.matrix.nrows

    @property
    def field(self) -> Field:
        return self.matrix.field

    def __call__(self, x: Sequence, y: Sequence):
        z = self.field.zero
        s = z
        for l, xl in enumerate(x):
            if not xl:
                continue
            row = self.matrix.rows[l]
            for m, ym in enumerate(y):
                if ym and row[m]:
                    s = s + xl * row[m] * ym
        return s

    def flatten(self) -> Vector:
        return self.matrix.flatten()

    def terms(self) -> dict[tuple[int, int], object]:
        return {
            (i + 1, j + 1): c for i, row in enumerate(self.matrix.rows) for j, c in enumerate(row) if c
        }

    def pullback(self, phi: Matrix) -> BilinearForm:
        """``(φθ)(x, y) = θ(φx, φy)``, i.e. ``φᵀ θ φ``."""
        return BilinearForm(phi.T @ self.matrix @ phi)

    def __add__(self, other: BilinearForm) -> BilinearForm:
        return BilinearForm(self.matrix + other.matrix)

    def __sub__(self, other: BilinearForm) -> BilinearForm:
        return BilinearForm(self.matrix - other.matrix)

    def __mul__(self, c) -> BilinearForm:
        return BilinearForm(self.matrix * c)

    __rmul__ = __mul__

    def __neg__(self) -> BilinearForm:
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __str__(self):
        return format_form(self)

    def __repr__(self):
        return f"BilinearForm({format_form(self)})"


def format_form(theta: BilinearForm) -> str:
    """Render as a combination of ``D<i>,<j>`` symbols, e.g. ``D1,3 + D4,1``."""
    parts = []
    for (i, j), c in sorted(theta.terms().items()):
        sym = f"D{i},{j}"
        if c == 1:
            parts.append(("+", sym))
        elif c == -1:
            parts.append(("-", sym))
        elif _is_negative(c):
            parts.append(("-", f"{-c}*{sym}"))
        else:
            parts.append(("+", f"{c}*{sym}"))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _is_negative(c) -> bool:
    try:
        return c < 0
    except TypeError:
        return False


_DELTA_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?D\s*(\d+)\s*,\s*(\d+)\s*")


def parse_form(text: str, n: int, field: Field = QQ) -> BilinearForm:
    """Inverse of :func:`format_form`: ``"D1,3 + D4,1 - 2*D3,1"``."""
    terms: dict[tuple[int, int], object] = {}
    pos = 0
    text = text.strip()
    if text == "0":
        return BilinearForm.zero(n, field)
    first = True
    while pos < len(text):
        m = _DELTA_TERM.match(text, pos)
        if not m or m.end() == pos or (not first and m.group(1) is None):
            raise ValueError(f"cannot parse form at {text[pos:]!r}")
        sign, coeff, i, j = m.groups()
        c = field(coeff or 1)
        if sign == "-":
            c = -c
        key = (int(i), int(j))
        if not (1 <= key[0] <= n and 1 <= key[1] <= n):
            raise DimensionMismatchError(f"D{key[0]},{key[1]} out of range for dimension {n}")
        terms[key] = terms.get(key, field.zero) + c
        pos = m.end()
        first = False
    return BilinearForm.from_deltas(terms, n, field)


def _check_form(a: Algebra, theta: BilinearForm) -> None:
    if theta.n != a.dim:
        raise DimensionMismatchError(f"form of size {theta.n} on algebra of dimension {a.dim}")
    if theta.field != a.field:
        raise FieldMismatchError(f"{theta.field!r} vs {a.field!r}")


def is_cocycle(a: Algebra, theta: BilinearForm) -> CheckResult:
    """Check both cocycle equations on every basis triple."""
    _check_form(a, theta)
    n = a.dim
    basis = a.basis()
    t = a.table
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = basis[i], basis[j], basis[k]
        lhs = theta(t[i][j], z) - theta(x, t[j][k])
        rhs1 = theta(t[i][k], y) - theta(x, t[k][j])
        if lhs != rhs1:
            return CheckResult(False, (i + 1, j + 1, k + 1), (lhs,), (rhs1,), "right-symmetric equation")
        rhs2 = theta(t[j][i], z) - theta(y, t[i][k])
        if lhs != rhs2:
            return CheckResult(False, (i + 1, j + 1, k + 1), (lhs,), (rhs2,), "left-symmetric equation")
    return PASS


def cocycle_constraints(a: Algebra) -> Matrix:
    """The ``2n³ x n²`` linear system whose kernel is ``Z²(A)``.

    Variable ``(l, m)`` sits in column ``l*n + m``.
    """
    n = a.dim
    f = a.field
    t = a._sparse
    rows = []
    for i, j, k in itertools.product(range(n), repeat=3):
        for eq in (0, 1):
            row = [f.zero] * (n * n)
            # θ(e_i e_j, e_k) - θ(e_i, e_j e_k)
            for l, c in t[i][j]:
                row[l * n + k] += c
            for l, c in t[j][k]:
                row[i * n + l] -= c
            if eq == 0:
                # - θ(e_i e_k, e_j) + θ(e_i, e_k e_j)
                for l, c in t[i][k]:
                    row[l * n + j] -= c
                for l, c in t[k][j]:
                    row[i * n + l] += c
            else:
                # - θ(e_j e_i, e_k) + θ(e_j, e_i e_k)
                for l, c in t[j][i]:
                    row[l * n + k] -= c
                for l, c in t[i][k]:
                    row[j * n + l] += c
            if any(row):
                rows.append(row)
    # entries are already field elements
    return Matrix._raw(tuple(map(tuple, rows)), n * n, f) if rows else Matrix.zeros(0, n * n, f)


@lru_cache(maxsize=512)
def cocycle_space(a: Algebra) -> tuple[BilinearForm, ...]:
    """Basis of ``Z²(A)``."""
    n = a.dim
    if n == 0:
        return ()
    ker = kernel_basis(cocycle_constraints(a))
    return tuple(BilinearForm.from_vector(v, n, a.field) for v in ker)


@lru_cache(maxsize=512)
def coboundary_space(a: Algebra) -> tuple[BilinearForm, ...]:
    """Basis of ``B²(A)``: the independent forms among ``(M^k)_{lm} = c_{lm}^k``."""
    n = a.dim
    f = a.field
    ech = Echelon(n * n, f)
    out = []
    for k in range(n):
        form = BilinearForm(Matrix([[a.table[l][m][k] for m in range(n)] for l in range(n)], ncols=n, field=f))
        if ech.add(form.flatten()):
            out.append(form)
    return tuple(out)


def coboundary(a: Algebra, f: Sequence) -> BilinearForm:
    """``δf`` for the linear functional with ``f(e_k) = f[k]``."""
    n = a.dim
    rows = [[sum((a.table[l][m][k] * f[k] for k in range(n)), a.field.zero) for m in range(n)] for l in range(n)]
    return BilinearForm(Matrix(rows, ncols=n, field=a.field))


@dataclass(frozen=True)
class CohomologyReport:
    algebra: str | None
    z2: tuple[BilinearForm, ...]
    b2: tuple[BilinearForm, ...]
    h2: tuple[BilinearForm, ...]

    @property
    def dims(self) -> tuple[int, int, int]:
        return (len(self.z2), len(self.b2), len(self.h2))

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "dims": {"Z2": len(self.z2), "B2": len(self.b2), "H2": len(self.h2)},
            "Z2": [format_form(t) for t in self.z2],
            "B2": [format_form(t) for t in self.b2],
            "H2": [format_form(t) for t in self.h2],
        }


@lru_cache(maxsize=512)
def cohomology_basis(a: Algebra) -> CohomologyReport:
    """``Z²``, ``B²`` and a deterministic choice of ``H²`` representatives."""
    z2 = cocycle_space(a)
    b2 = coboundary_space(a)
    try:
        reps = complement_in_span([t.flatten() for t in z2], [t.flatten() for t in b2])
    except NotInSpanError:
        raise NotInSpanError(
            f"{a.name or 'algebra'}: some coboundary is not a cocycle, so the algebra is not assosymmetric"
        ) from None
    n = a.dim
    h2 = tuple(BilinearForm.from_vector(v, n, a.field) for v in reps)
    return CohomologyReport(a.name, z2, b2, h2)


def in_span(forms: Sequence[BilinearForm], theta: BilinearForm) -> bool:
    if not forms:
        return theta.is_zero()
    ech = Echelon(theta.n * theta.n, theta.field)
    for t in forms:
        ech.add(t.flatten())
    return ech.contains(theta.flatten())


def class_span_equal(a: Algebra, u: Sequence[BilinearForm], w: Sequence[BilinearForm]) -> bool:
    """Whether ``u`` and ``w`` span the same subspace of ``H²`` (i.e. modulo ``B²``)."""
    b2 = [t.flatten() for t in coboundary_space(a)]
    n2 = a.dim * a.dim

    def span_mod(forms):
        ech = Echelon(n2, a.field)
        for v in b2:
            ech.add(v)
        for t in forms:
            ech.add(t.flatten())
        return ech

    eu, ew = span_mod(u), span_mod(w)
    return all(ew.contains(t.flatten()) for t in u) and all(eu.contains(t.flatten()) for t in w)


def _require_cocycles(a: Algebra, thetas: Sequence[BilinearForm]) -> None:
    for idx, theta in enumerate(thetas):
        res = is_cocycle(a, theta)
        if not res:
            raise NotACocycleError(f"form #{idx + 1} ({format_form(theta)}) fails at {res.location}: {res.detail}")


def form_annihilator(theta: BilinearForm) -> list[Vector]:
    n = theta.n
    rows = []
    for j in range(n):
        rows.append([theta.matrix.rows[i][j] for i in range(n)])
        rows.append(list(theta.matrix.rows[j]))
    return kernel_basis(Matrix(rows, ncols=n, field=theta.field))


def cocycle_annihilator(a: Algebra, thetas: Sequence[BilinearForm]) -> list[Vector]:
    """Basis of ``{x : θ(x, A) + θ(A, x) = 0}`` jointly for every form given."""
    _require_cocycles(a, thetas)
    n = a.dim
    if not thetas:
        return a.basis()
    rows = []
    for theta in thetas:
        m = theta.matrix.rows
        for j in range(n):
            rows.append([m[i][j] for i in range(n)])
            rows.append(list(m[j]))
    return kernel_basis(Matrix(rows, ncols=n, field=a.field))


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Whether ``<[θ_1], ..., [θ_s]>`` yields a non-split extension with annihilator ``V``."""

    trivial_intersection: bool
    independent_in_h2: bool
    intersection: tuple[Vector, ...]

    @property
    def admissible(self) -> bool:
        return self.trivial_intersection and self.independent_in_h2

    def __bool__(self):
        return self.admissible


def check_extension_admissible(a: Algebra, thetas: Sequence[BilinearForm]) -> AdmissibilityVerdict:
    if not thetas:
        raise ValueError("need at least one cocycle")
    ann_theta = cocycle_annihilator(a, thetas)
    inter = intersect_subspaces(ann_theta, annihilator(a), a.dim, a.field)
    n2 = a.dim * a.dim
    ech = Echelon(n2, a.field)
    for t in coboundary_space(a):
        ech.add(t.flatten())
    independent = all(ech.add(t.flatten()) for t in thetas)
    return AdmissibilityVerdict(not inter, independent, tuple(inter))


def aut_closure_defect(a: Algebra, phi: Matrix) -> BilinearForm | None:
    """First ``Z²`` basis form whose pullback by ``φ`` leaves ``Z²``, if any."""
    z2 = cocycle_space(a)
    for t in z2:
        if not in_span(z2, t.pullback(phi)):
            return t
    return None


def complement_forms(a: Algebra) -> list[BilinearForm]:
    """Elementary ``Δ_ij`` forms completing ``Z²`` to all bilinear forms."""
    n = a.dim
    big = [BilinearForm.delta(i + 1, j + 1, n, a.field).flatten() for i in range(n) for j in range(n)]
    z2 = [t.flatten() for t in cocycle_space(a)]
    return [BilinearForm.from_vector(v, n, a.field) for v in complement_in_span(z2 + big, z2)]


__all__ = [
    "AdmissibilityVerdict",
    "BilinearForm",
    "CohomologyReport",
    "aut_closure_defect",
    "check_extension_admissible",
    "class_span_equal",
    "coboundary",
    "coboundary_space",
    "cocycle_annihilator",
    "cocycle_constraints",
    "cocycle_space",
    "cohomology_basis",
    "complement_forms",
    "form_annihilator",
    "format_form",
    "in_span",
    "is_cocycle",
    "parse_form",
]
