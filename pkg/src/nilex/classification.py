"""Cocycle representatives and automorphism forms behind the catalog.

Each non-split family of the catalog arises as a central extension of a
smaller algebra by an explicit combination of the classes ``∇_i``.  This
module records those combinations so they can be rebuilt and compared
with the stored tables, and the parametric automorphism matrices used to
act on them.

Automorphism matrices follow the library convention: column ``j`` is the
image of ``e_j``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .algebra import Algebra
from .catalog import a5_05_locus_samples, catalog_get, sample_parameters
from .cohomology import BilinearForm, parse_form
from .extensions import ExtensionSpec, central_extension
from .fields import QQ
from .linalg import Matrix

F = Fraction


def _a5_05_nabla3(alpha: Fraction, beta: Fraction) -> BilinearForm:
    a, b = QQ(alpha), QQ(beta)
    if (a, b) == (0, F(1, 2)):
        # the generic formula loses its e5 terms here; this point has its own class
        return parse_form("2*D1,5 - 3*D2,3 - 2*D2,4 - 3*D3,2 + D4,2 - 4*D5,1", 5)
    return BilinearForm.from_deltas(
        {
            (1, 5): 2 * b - 1,
            (2, 3): 2 * a * b - 2 * b + 1,
            (2, 4): a + 2 * b * b - 3 * b + 1,
            (3, 2): 3 * a - 2 * a * b + 2 * b * b - 3 * b + 1,
            (4, 2): 2 * a - 2 * a * b + 2 * b - 1,
            (5, 1): 2 * a - 2 * b + 1,
        },
        5,
    )


# base family -> label -> Δ-combination (or a function of the base parameters)
NABLA: dict[str, dict[int, str | Callable[..., BilinearForm]]] = {
    "A4_01": {1: "D1,3 + D4,1", 2: "D1,4 - D3,1 - D4,1", 3: "D2,2 + 2*D3,1 + D4,1"},
    "A4_04": {1: "D2,1", 2: "D1,4 + D2,3 + D3,2 + D4,1"},
    "A5_02": {1: "D1,3 - D4,1", 2: "D1,4 + D3,1 - D4,1", 3: "D1,5 - D2,3 - D3,2 + D5,1"},
    "A5_05": {1: "D1,4 - D3,1 - D4,1", 2: "D1,3 + D4,1", 3: _a5_05_nabla3},
    "A5_06": {1: "D2,1", 2: "D1,5 + D2,4 + D3,3 + D4,2 + D5,1"},
    "A5_07": {1: "D2,1", 2: "D1,5 + 2*D2,2 + D2,4 + 3*D3,1 + D3,3 + D4,2 + D5,1"},
}


def nabla(base: str, label: int, params: Mapping | None = None) -> BilinearForm:
    spec = NABLA[base][label]
    if callable(spec):
        p = dict(params or {})
        return spec(p["alpha"], p["beta"])
    return parse_form(spec, int(base[1]))


def combination(base: str, coeffs: Mapping[int, object], params: Mapping | None = None) -> BilinearForm:
    """``Σ c_i ∇_i`` over the classes of ``base``."""
    n = int(base[1])
    out = BilinearForm.zero(n)
    for label, c in coeffs.items():
        if c:
            out = out + nabla(base, label, params) * QQ(c)
    return out


@dataclass(frozen=True)
class ExtensionCase:
    """``target(target_params) = base(base_params)`` extended by the listed combinations."""

    target: str
    target_params: Mapping[str, Fraction]
    base: str
    base_params: Mapping[str, Fraction]
    combos: tuple[Mapping[int, object], ...]
    literal: bool = True

    @property
    def label(self) -> str:
        return _label(self.target, self.target_params)

    @property
    def base_label(self) -> str:
        return _label(self.base, self.base_params)

    def base_algebra(self) -> Algebra:
        return catalog_get(self.base, _without_alpha(self.base, self.base_params))

    def target_algebra(self) -> Algebra:
        return catalog_get(self.target, _without_alpha(self.target, self.target_params), strict=False)

    def spec(self) -> ExtensionSpec:
        base = self.base_algebra()
        forms = tuple(combination(self.base, c, self.base_params) for c in self.combos)
        return ExtensionSpec(base, forms)

    def build(self) -> Algebra:
        return central_extension(self.spec(), name=f"{self.base_label}+theta")

    def describe(self) -> str:
        parts = []
        for c in self.combos:
            terms = []
            for k, v in c.items():
                if v == 1:
                    terms.append(f"N{k}")
                elif v:
                    terms.append(f"{v}*N{k}")
            parts.append(" + ".join(terms) or "0")
        return f"{self.base_label} by <{', '.join(parts)}>"


def _label(name: str, params: Mapping) -> str:
    if not params:
        return name
    return f"{name}({','.join(str(v) for v in params.values())})"


def _without_alpha(name: str, params: Mapping) -> dict:
    if name in ("A6_08", "A6_09", "A6_10", "A6_11"):
        return {k: v for k, v in params.items() if k != "alpha"}
    return dict(params)


def _locus_params(p: Mapping) -> dict:
    return {"alpha": p["alpha"], "beta": p["beta"]}


def extension_cases(count: int = 3) -> list[ExtensionCase]:
    """Every catalog family of dimension 5 and 6 that is a non-split extension, at sampled parameters."""
    one = F(1)
    cases = [ExtensionCase("A5_03", {}, "A4_01", {}, ({1: 1},))]
    for p in sample_parameters("A5_04", count):
        cases.append(ExtensionCase("A5_04", p, "A4_01", {}, ({1: p["alpha"], 2: 1},)))
    for p in sample_parameters("A5_05", count):
        cases.append(ExtensionCase("A5_05", p, "A4_01", {}, ({1: p["alpha"], 2: p["beta"], 3: 1},)))
    cases.append(ExtensionCase("A5_06", {}, "A4_04", {"alpha": one}, ({2: 1},)))
    cases.append(ExtensionCase("A5_07", {}, "A4_04", {"alpha": one}, ({1: 1, 2: 1},)))

    cases.append(ExtensionCase("A6_01", {}, "A4_01", {}, ({1: 1}, {2: 1})))
    for p in sample_parameters("A6_02", count):
        cases.append(ExtensionCase("A6_02", p, "A4_01", {}, ({1: 1}, {2: p["alpha"], 3: 1})))
    for p in sample_parameters("A6_03", count):
        cases.append(
            ExtensionCase("A6_03", p, "A4_01", {}, ({1: p["alpha"], 2: 1}, {1: p["beta"], 3: 1}))
        )
    cases.append(ExtensionCase("A6_04", {}, "A4_04", {"alpha": one}, ({2: 1}, {1: 1})))
    for p in sample_parameters("A6_05", count):
        cases.append(ExtensionCase("A6_05", p, "A5_02", {"alpha": one}, ({1: p["alpha"], 2: 1, 3: 1},)))
    cases.append(ExtensionCase("A6_06", {}, "A5_02", {"alpha": one}, ({1: 1, 3: 1},)))
    cases.append(ExtensionCase("A6_07", {}, "A5_02", {"alpha": one}, ({3: 1},)))
    for fam, combo in (("A6_08", {3: 1}), ("A6_09", {1: 1, 3: 1}), ("A6_10", {3: 1}), ("A6_11", {1: 1, 3: 1})):
        for p in sample_parameters(fam, count):
            cases.append(ExtensionCase(fam, p, "A5_05", _locus_params(p), (combo,)))
    for p in sample_parameters("A6_12_derivation", count):
        cases.append(
            ExtensionCase(
                "A6_12_derivation", p, "A5_05", {"alpha": one, "beta": one}, ({1: p["alpha"], 2: 1, 3: 1},)
            )
        )
    cases.append(ExtensionCase("A6_13", {}, "A5_05", {"alpha": one, "beta": F(3, 2)}, ({2: 1, 3: 1},)))
    half = {"alpha": F(0), "beta": F(1, 2)}
    cases.append(ExtensionCase("A6_14", {}, "A5_05", half, ({3: 1},)))
    cases.append(ExtensionCase("A6_15", {}, "A5_05", half, ({2: 1, 3: 1},)))
    cases.append(ExtensionCase("A6_16", {}, "A5_06", {}, ({2: 1},)))
    cases.append(ExtensionCase("A6_17", {}, "A5_06", {}, ({1: 1, 2: 1},)))
    cases.append(ExtensionCase("A6_18", {}, "A5_07", {}, ({2: 1},)))
    return cases


# ---------------------------------------------------------------- automorphisms


@dataclass(frozen=True)
class AutForm:
    """A parametric family of automorphisms of one algebra.

    ``build(v, p)`` takes the free variables ``v`` (``x`` is the one that
    must be non-zero) and the algebra parameters ``p``.
    """

    algebra: str
    variables: tuple[str, ...]
    build: Callable[[Mapping, Mapping], list[list]]
    algebra_params: tuple[Mapping[str, Fraction], ...] = ({},)
    variant: str = ""
    note: str = ""

    @property
    def label(self) -> str:
        return f"Aut({self.algebra}){' ' + self.variant if self.variant else ''}"

    def matrix(self, values: Mapping, params: Mapping | None = None) -> Matrix:
        return Matrix(self.build(values, params or {}), field=QQ)


def _aut_a4_01(v, p):
    x, y, z, t = v["x"], v["y"], v["z"], v["t"]
    return [[x, 0, 0, 0], [y, x * x, 0, 0], [z, x * y, x**3, 0], [t, x * y, 0, x**3]]


def _aut_a4_04(v, p):
    x, y, z, t = v["x"], v["y"], v["z"], v["t"]
    return [
        [x, 0, 0, 0],
        [y, x * x, 0, 0],
        [z, 2 * x * y, x**3, 0],
        [t, 2 * x * z + y * y, 3 * y * x * x, x**4],
    ]


def _aut_a5_02(v, p):
    x, y, z, t, w = v["x"], v["y"], v["z"], v["t"], v["w"]
    return [
        [x, 0, 0, 0, 0],
        [y, x * x, 0, 0, 0],
        [z, 2 * x * y, x**3, 0, 0],
        [t, x * y, 0, x**3, 0],
        [w, -y * y - 2 * x * z, -3 * x * x * y, 0, x**4],
    ]


def _aut_a5_05(v, p):
    x, y, z, t, w = v["x"], v["y"], v["z"], v["t"], v["w"]
    a, b = p["alpha"], p["beta"]
    return [
        [x, 0, 0, 0, 0],
        [y / x, x * x, 0, 0, 0],
        [z, y, x**3, 0, 0],
        [t, y, 0, x**3, 0],
        [w, (x**3 * ((2 - b + a) * z + (1 + a) * t) + y * y) / (x * x), (a - 2 * b + 4) * x * y, (a + b + 1) * x * y, x**4],
    ]


def _aut_a5_06(v, p):
    x, y, z, t, w = v["x"], v["y"], v["z"], v["t"], v["w"]
    return [
        [x, 0, 0, 0, 0],
        [y, x * x, 0, 0, 0],
        [z, 2 * x * y, x**3, 0, 0],
        [t, 2 * x * z + y * y, 3 * x * x * y, x**4, 0],
        [w, 2 * x * t + 2 * y * z, 3 * x * x * z + 3 * x * y * y, 4 * x**3 * y, x**5],
    ]


def _aut_a5_07(k: int):
    s = (-1) ** k

    def build(v, p):
        x, y, z, t = v["x"], v["y"], v["z"], v["t"]
        return [
            [s, 0, 0, 0, 0],
            [x, 1, 0, 0, 0],
            [y, s * 2 * x, s, 0, 0],
            [z, x * x + s * 2 * y, 3 * x, 1, 0],
            [t, 2 * x * y + s * (x + 2 * z), s * 3 * x * x + 3 * y, s * 4 * x, s],
        ]

    return build


def aut_forms() -> list[AutForm]:
    locus = tuple({"alpha": a, "beta": b} for a, b in a5_05_locus_samples(4))
    return [
        AutForm("A4_01", ("x", "y", "z", "t"), _aut_a4_01),
        AutForm("A4_04", ("x", "y", "z", "t"), _aut_a4_04, ({"alpha": F(1)},)),
        AutForm(
            "A5_02",
            ("x", "y", "z", "t", "w"),
            _aut_a5_02,
            ({"alpha": F(1)},),
            note="printed under the heading for A5_07; it is the group of A5_02(1)",
        ),
        AutForm("A5_05", ("x", "y", "z", "t", "w"), _aut_a5_05, locus, note="special locus only"),
        AutForm("A5_06", ("x", "y", "z", "t", "w"), _aut_a5_06),
        AutForm("A5_07", ("x", "y", "z", "t"), _aut_a5_07(1), variant="k=1", note="x is free; the sign is fixed"),
        AutForm("A5_07", ("x", "y", "z", "t"), _aut_a5_07(2), variant="k=2", note="x is free; the sign is fixed"),
    ]


def seeded_values(form: AutForm, count: int, seed: int) -> list[dict[str, Fraction]]:
    """``count`` deterministic rational assignments with ``x ≠ 0``."""
    rng = random.Random(f"{seed}:{form.label}")
    out = []
    for _ in range(count):
        v = {}
        for name in form.variables:
            while True:
                c = F(rng.randint(-6, 6), rng.randint(1, 5))
                if c or name != "x":
                    break
            v[name] = c
        out.append(v)
    return out


@dataclass
class AutCheck:
    form: AutForm
    params: Mapping
    values: Mapping
    ok: bool
    detail: str = ""
    extra: dict = field(default_factory=dict)


__all__ = [
    "AutCheck",
    "AutForm",
    "ExtensionCase",
    "NABLA",
    "aut_forms",
    "combination",
    "extension_cases",
    "nabla",
    "seeded_values",
]
