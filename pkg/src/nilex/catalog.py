"""Every algebra of the classification, with its parameters.

Concrete tables are stored as text documents; parametric families as
functions of exact rational parameters.  The four families ``A6_08`` to
``A6_11`` live on the conic ``(2α - β)² + 3(β - 1)² = 1``: they take ``β``
and derive ``α = (β ± √(-2 + 6β - 3β²)) / 2`` with the sign fixed by the
family.  Only rational points are supported; they are produced by the
parametrization

    u = (1 - 3t²) / (1 + 3t²),   β = 1 + 2t / (1 + 3t²),   α = (u + β) / 2

where ``u = 2α - β`` is the signed square root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .algebra import Algebra
from .dsl import parse_algebra
from .errors import ExcludedParameterError, OffLocusError, UnknownAlgebraError
from .fields import QQ

Products = dict[tuple[int, int], dict[int, Fraction]]

F = Fraction


def _doc(name: str, dim: int, body: str) -> str:
    return f"algebra {name} dim {dim}\n{body}"


_CONCRETE = {
    "A2_01": (2, "e1*e1 = e2"),
    # quotient of A5_01 by its annihilator; the printed table is kept as A3_01_printed
    "A3_01": (3, "e1*e1 = e2\ne2*e1 = e3"),
    "A3_01_printed": (3, "e1*e1 = e3\ne2*e1 = e3"),
    "A4_01": (4, "e1*e1 = e2\ne1*e2 = e4\ne2*e1 = e3"),
    "A4_02": (4, "e1*e1 = e2\ne1*e2 = e4\ne1*e3 = e4\ne2*e1 = e3\ne2*e2 = -e4\ne3*e1 = -2 e4"),
    "A4_03": (4, "e1*e1 = e2\ne1*e3 = e4\ne2*e1 = e3\ne2*e2 = -e4\ne3*e1 = -2 e4"),
    "A4_05": (4, "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = -2 e4\ne2*e1 = e4\ne2*e2 = -e4\ne3*e1 = e4"),
    "A4_06": (4, "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = -3 e4\ne2*e1 = -e3 + e4\ne2*e2 = -3 e4\ne3*e1 = 3 e4"),
    "A5_01": (5, "e1*e1 = e2\ne1*e2 = e4\ne1*e3 = e5\ne2*e1 = e3\ne2*e2 = -e5\ne3*e1 = -2 e5"),
    "A5_03": (5, "e1*e1 = e2\ne1*e2 = e4\ne1*e3 = e5\ne2*e1 = e3\ne4*e1 = e5"),
    "A5_06": (
        5,
        "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = e4\ne1*e4 = e5\ne2*e1 = e3\ne2*e2 = e4\n"
        "e2*e3 = e5\ne3*e1 = e4\ne3*e2 = e5\ne4*e1 = e5",
    ),
    "A5_07": (
        5,
        "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = e4\ne1*e4 = e5\ne2*e1 = e3 + e5\ne2*e2 = e4\n"
        "e2*e3 = e5\ne3*e1 = e4\ne3*e2 = e5\ne4*e1 = e5",
    ),
    "A6_01": (6, "e1*e1 = e2\ne1*e2 = e4\ne1*e3 = e5\ne1*e4 = e6\ne2*e1 = e3\ne3*e1 = -e6\ne4*e1 = e5 - e6"),
    "A6_04": (
        6,
        "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = e4\ne1*e4 = e5\ne2*e1 = e3 + e6\ne2*e2 = e4\n"
        "e2*e3 = e5\ne3*e1 = e4\ne3*e2 = e5\ne4*e1 = e5",
    ),
    "A6_06": (
        6,
        "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = -e5 + e6\ne1*e5 = e6\ne2*e1 = e3 + e4\ne2*e2 = -e5\n"
        "e2*e3 = -e6\ne3*e1 = -e5\ne3*e2 = -e6\ne4*e1 = -e6\ne5*e1 = e6",
    ),
    "A6_07": (
        6,
        "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = -e5\ne1*e5 = e6\ne2*e1 = e3 + e4\ne2*e2 = -e5\n"
        "e2*e3 = -e6\ne3*e1 = -e5\ne3*e2 = -e6\ne5*e1 = e6",
    ),
    # e4*e1 carries the 1/2 e5 inherited from A5_05(1, 3/2); without it the identities fail
    "A6_13": (
        6,
        "e1*e1 = e2\ne1*e2 = e4\ne1*e3 = e5 + e6\ne1*e4 = 3/2 e5\ne1*e5 = 2 e6\ne2*e1 = e3\n"
        "e2*e2 = e5\ne2*e3 = e6\ne2*e4 = 2 e6\ne3*e1 = 1/2 e5\ne3*e2 = e6\ne4*e1 = 1/2 e5 + e6\ne4*e2 = e6",
    ),
    "A6_13_printed": (
        6,
        "e1*e1 = e2\ne1*e2 = e4\ne1*e3 = e5 + e6\ne1*e4 = 3/2 e5\ne1*e5 = 2 e6\ne2*e1 = e3\n"
        "e2*e2 = e5\ne2*e3 = e6\ne2*e4 = 2 e6\ne3*e1 = 1/2 e5\ne3*e2 = e6\ne4*e1 = e6\ne4*e2 = e6",
    ),
    "A6_14": (
        6,
        "e1*e1 = e2\ne1*e2 = e4\ne1*e4 = 1/2 e5\ne1*e5 = 2 e6\ne2*e1 = e3\ne2*e2 = e5\n"
        "e2*e3 = -3 e6\ne2*e4 = -2 e6\ne3*e1 = 3/2 e5\ne3*e2 = -3 e6\ne4*e1 = 1/2 e5\ne4*e2 = e6\ne5*e1 = -4 e6",
    ),
    "A6_15": (
        6,
        "e1*e1 = e2\ne1*e2 = e4\ne1*e3 = e6\ne1*e4 = 1/2 e5\ne1*e5 = 2 e6\ne2*e1 = e3\ne2*e2 = e5\n"
        "e2*e3 = -3 e6\ne2*e4 = -2 e6\ne3*e1 = 3/2 e5\ne3*e2 = -3 e6\ne4*e1 = 1/2 e5 + e6\ne4*e2 = e6\n"
        "e5*e1 = -4 e6",
    ),
    "A6_16": (
        6,
        "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = e4\ne1*e4 = e5\ne1*e5 = e6\ne2*e1 = e3\ne2*e2 = e4\n"
        "e2*e3 = e5\ne2*e4 = e6\ne3*e1 = e4\ne3*e2 = e5\ne3*e3 = e6\ne4*e1 = e5\ne4*e2 = e6\ne5*e1 = e6",
    ),
    "A6_17": (
        6,
        "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = e4\ne1*e4 = e5\ne1*e5 = e6\ne2*e1 = e3 + e6\ne2*e2 = e4\n"
        "e2*e3 = e5\ne2*e4 = e6\ne3*e1 = e4\ne3*e2 = e5\ne3*e3 = e6\ne4*e1 = e5\ne4*e2 = e6\ne5*e1 = e6",
    ),
    "A6_18": (
        6,
        "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = e4\ne1*e4 = e5\ne1*e5 = e6\ne2*e1 = e3 + e5\n"
        "e2*e2 = e4 + 2 e6\ne2*e3 = e5\ne2*e4 = e6\ne3*e1 = e4 + 3 e6\ne3*e2 = e5\ne3*e3 = e6\n"
        "e4*e1 = e5\ne4*e2 = e6\ne5*e1 = e6",
    ),
}


# ---------------------------------------------------------------- parametric tables


def _a3_02(a: Fraction) -> Products:
    return {(1, 1): {2: 1}, (1, 2): {3: 1}, (2, 1): {3: a}}


def _a4_04(a: Fraction) -> Products:
    return {
        (1, 1): {2: 1},
        (1, 2): {3: 1},
        (1, 3): {4: 2 - a},
        (2, 1): {3: a},
        (2, 2): {4: a * a - a + 1},
        (3, 1): {4: 2 * a - 1},
    }


def _a5_02(a: Fraction) -> Products:
    return {
        (1, 1): {2: 1},
        (1, 2): {3: 1},
        (1, 3): {5: a - 2},
        (2, 1): {3: a, 4: 1},
        (2, 2): {5: a - a * a - 1},
        (3, 1): {5: 1 - 2 * a},
    }


def _a5_04(a: Fraction) -> Products:
    return {
        (1, 1): {2: 1},
        (1, 2): {4: 1},
        (1, 3): {5: a},
        (1, 4): {5: 1},
        (2, 1): {3: 1},
        (3, 1): {5: -1},
        (4, 1): {5: a - 1},
    }


def _a5_05(a: Fraction, b: Fraction) -> Products:
    return {
        (1, 1): {2: 1},
        (1, 2): {4: 1},
        (1, 3): {5: a},
        (1, 4): {5: b},
        (2, 1): {3: 1},
        (2, 2): {5: 1},
        (3, 1): {5: 2 - b},
        (4, 1): {5: a - b + 1},
    }


def _a6_02(a: Fraction) -> Products:
    return {
        (1, 1): {2: 1},
        (1, 2): {4: 1},
        (1, 3): {5: 1},
        (1, 4): {6: a},
        (2, 1): {3: 1},
        (2, 2): {6: 1},
        (3, 1): {6: 2 - a},
        (4, 1): {5: 1, 6: 1 - a},
    }


def _a6_03(a: Fraction, b: Fraction) -> Products:
    return {
        (1, 1): {2: 1},
        (1, 2): {4: 1},
        (1, 3): {5: a, 6: b},
        (1, 4): {5: 1},
        (2, 1): {3: 1},
        (2, 2): {6: 1},
        (3, 1): {5: -1, 6: 2},
        (4, 1): {5: a - 1, 6: b + 1},
    }


def _a6_05(a: Fraction) -> Products:
    return {
        (1, 1): {2: 1},
        (1, 2): {3: 1},
        (1, 3): {5: -1, 6: a},
        (1, 4): {6: 1},
        (1, 5): {6: 1},
        (2, 1): {3: 1, 4: 1},
        (2, 2): {5: -1},
        (2, 3): {6: -1},
        (3, 1): {5: -1, 6: 1},
        (3, 2): {6: -1},
        (4, 1): {6: -(a + 1)},
        (5, 1): {6: 1},
    }


def _a6_locus(a: Fraction, b: Fraction, shifted: bool) -> Products:
    """Tables 08/10 (``shifted=False``) and 09/11 (``shifted=True``)."""
    s = 1 if shifted else 0
    return {
        (1, 1): {2: 1},
        (1, 2): {4: 1},
        (1, 3): {5: a},
        (1, 4): {5: b, 6: s},
        (1, 5): {6: 2 * b - 1},
        (2, 1): {3: 1},
        (2, 2): {5: 1},
        (2, 3): {6: 2 * a * b - 2 * b + 1},
        (2, 4): {6: a + 2 * b * b - 3 * b + 1},
        (3, 1): {5: 2 - b, 6: -s},
        (3, 2): {6: 3 * a - 2 * a * b + 2 * b * b - 3 * b + 1},
        (4, 1): {5: a - b + 1, 6: -s},
        (4, 2): {6: 2 * a - 2 * a * b + 2 * b - 1},
        (5, 1): {6: 2 * a - 2 * b + 1},
    }


def _a6_12(a: Fraction) -> Products:
    return {
        (1, 1): {2: 1},
        (1, 2): {4: 1},
        (1, 3): {5: 1, 6: 1},
        (1, 4): {5: 1, 6: 2 * a},
        (1, 5): {6: 1},
        (2, 1): {3: 1},
        (2, 2): {5: 1, 6: a},
        (2, 3): {6: 1},
        (2, 4): {6: 1},
        (3, 1): {5: 1},
        (3, 2): {6: 1},
        (4, 1): {5: 1, 6: 1 - a},
        (4, 2): {6: 1},
        (5, 1): {6: 1},
    }


def _a6_12_derivation(a: Fraction) -> Products:
    return {
        (1, 1): {2: 1},
        (1, 2): {4: 1},
        (1, 3): {5: 1, 6: 1},
        (1, 4): {5: 1, 6: a},
        (1, 5): {6: 1},
        (2, 1): {3: 1},
        (2, 2): {5: 1},
        (2, 3): {6: 1},
        (2, 4): {6: 1},
        (3, 1): {5: 1, 6: -a},
        (3, 2): {6: 1},
        (4, 1): {5: 1, 6: 1 - a},
        (4, 2): {6: 1},
        (5, 1): {6: 1},
    }


# ---------------------------------------------------------------- special locus


def rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def locus_discriminant(beta: Fraction) -> Fraction:
    return -2 + 6 * beta - 3 * beta * beta


def on_locus(alpha: Fraction, beta: Fraction) -> bool:
    """``(2α - β)² + 3(β - 1)² = 1``."""
    return (2 * alpha - beta) ** 2 + 3 * (beta - 1) ** 2 == 1


def locus_alpha(beta, sign: int) -> Fraction:
    """``α = (β + sign·√D) / 2``; raises when ``√D`` is not rational."""
    beta = QQ(beta)
    root = rational_sqrt(locus_discriminant(beta))
    if root is None:
        raise OffLocusError(f"beta = {beta}: -2 + 6β - 3β² = {locus_discriminant(beta)} is not a rational square")
    return (beta + sign * root) / 2


def locus_point(t) -> tuple[Fraction, Fraction]:
    """``(β, α)`` for the parameter ``t``; ``2α - β`` has the sign of ``1 - 3t²``."""
    t = QQ(t)
    den = 1 + 3 * t * t
    u = (1 - 3 * t * t) / den
    beta = 1 + 2 * t / den
    return beta, (u + beta) / 2


def _t_values():
    """Small rationals by height: 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ..."""
    yield Fraction(0)
    h = 1
    while True:
        found = []
        for q in range(1, h + 1):
            for p in range(0, h + 1):
                if max(p, q) == h and math.gcd(p, q) == 1:
                    found.append(Fraction(p, q))
        for x in sorted(found, key=lambda v: (v.denominator != 1, v)):
            yield x
            yield -x
        h += 1


# ---------------------------------------------------------------- entries


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    dim: int
    params: tuple[str, ...]
    provenance: str
    builder: Callable[..., Products] | None = None
    exclusions: Mapping[str, frozenset] = field(default_factory=dict)
    locus_sign: int = 0
    status: str = "canonical"
    note: str = ""

    @property
    def parametric(self) -> bool:
        return bool(self.params)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "params": list(self.params),
            "exclusions": {k: sorted(str(x) for x in v) for k, v in self.exclusions.items()},
            "locus": {1: "plus", -1: "minus"}.get(self.locus_sign),
            "status": self.status,
            "provenance": self.provenance,
            "note": self.note,
        }


SMALL = "list of 2-, 3- and 4-dimensional algebras"
DIM5 = "5-dimensional classification list"
DIM6 = "6-dimensional classification list"

_ENTRIES: dict[str, CatalogEntry] = {}


def _add(entry: CatalogEntry) -> None:
    _ENTRIES[entry.name] = entry


for _name in ("A2_01", "A4_01", "A4_02", "A4_03", "A4_05", "A4_06"):
    _add(CatalogEntry(_name, _CONCRETE[_name][0], (), SMALL))
_add(
    CatalogEntry(
        "A3_01",
        3,
        (),
        SMALL,
        status="corrected",
        note="printed table is not one-generated; stored table is A5_01 modulo its annihilator",
    )
)
_add(CatalogEntry("A3_01_printed", 3, (), SMALL, status="secondary", note="table as printed; not one-generated"))
_add(CatalogEntry("A3_02", 3, ("alpha",), SMALL, _a3_02))
_add(CatalogEntry("A4_04", 4, ("alpha",), SMALL, _a4_04))
for _name in ("A5_01", "A5_03", "A5_06", "A5_07"):
    _add(CatalogEntry(_name, 5, (), DIM5))
_add(CatalogEntry("A5_02", 5, ("alpha",), DIM5, _a5_02))
_add(CatalogEntry("A5_04", 5, ("alpha",), DIM5, _a5_04))
_add(
    CatalogEntry(
        "A5_05",
        5,
        ("alpha", "beta"),
        DIM5,
        _a5_05,
        note="on the curve a(a-b+1) = b(2-b) the annihilator is 2-dimensional; samples avoid it",
    )
)
for _name in ("A6_01", "A6_04", "A6_06", "A6_07", "A6_14", "A6_15", "A6_16", "A6_17", "A6_18"):
    _add(CatalogEntry(_name, 6, (), DIM6))
_add(CatalogEntry("A6_02", 6, ("alpha",), DIM6, _a6_02))
_add(CatalogEntry("A6_03", 6, ("alpha", "beta"), DIM6, _a6_03))
_add(CatalogEntry("A6_05", 6, ("alpha",), DIM6, _a6_05))
_add(
    CatalogEntry(
        "A6_08",
        6,
        ("beta",),
        DIM6,
        lambda a, b: _a6_locus(a, b, False),
        {"beta": frozenset({F(1), F(3, 2)})},
        locus_sign=1,
    )
)
_add(
    CatalogEntry(
        "A6_09",
        6,
        ("beta",),
        DIM6,
        lambda a, b: _a6_locus(a, b, True),
        {"beta": frozenset({F(3, 2)})},
        locus_sign=1,
    )
)
_add(
    CatalogEntry(
        "A6_10",
        6,
        ("beta",),
        DIM6,
        lambda a, b: _a6_locus(a, b, False),
        {"beta": frozenset({F(1, 2)})},
        locus_sign=-1,
    )
)
_add(
    CatalogEntry(
        "A6_11",
        6,
        ("beta",),
        DIM6,
        lambda a, b: _a6_locus(a, b, True),
        {"beta": frozenset({F(1, 2)})},
        locus_sign=-1,
    )
)
_add(CatalogEntry("A6_12", 6, ("alpha",), DIM6, _a6_12))
_add(
    CatalogEntry(
        "A6_12_derivation",
        6,
        ("alpha",),
        "extensions of A5_05(1,1)",
        _a6_12_derivation,
        status="secondary",
        note="variant printed alongside the derivation; differs from A6_12 in the e6 coefficients",
    )
)
_add(
    CatalogEntry(
        "A6_13",
        6,
        (),
        DIM6,
        status="corrected",
        note="e4*e1 gains 1/2 e5 from the base A5_05(1,3/2); the printed table fails the identities",
    )
)
_add(CatalogEntry("A6_13_printed", 6, (), DIM6, status="secondary", note="table as printed; not assosymmetric"))


def entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownAlgebraError(f"unknown algebra {name!r}") from None


def names(dim: int | None = None, include_secondary: bool = False) -> list[str]:
    out = []
    for n, e in _ENTRIES.items():
        if dim is not None and e.dim != dim:
            continue
        if e.status == "secondary" and not include_secondary:
            continue
        out.append(n)
    return sorted(out)


_ALIASES = {"alpha": "alpha", "a": "alpha", "α": "alpha", "beta": "beta", "b": "beta", "β": "beta", "t": "t"}


def _normalize_params(params: Mapping | None, kw: Mapping) -> dict[str, Fraction]:
    merged = dict(params or {})
    merged.update(kw)
    out = {}
    for k, v in merged.items():
        key = _ALIASES.get(k)
        if key is None:
            raise ValueError(f"unknown parameter {k!r}")
        try:
            out[key] = QQ(v)
        except (TypeError, ValueError, ZeroDivisionError):
            raise ValueError(f"parameter {k} = {v!r} is not an exact rational") from None
    return out


def catalog_get(name: str, params: Mapping | None = None, strict: bool = True, **kw) -> Algebra:
    """Instantiate a catalog algebra.

    ``strict=False`` allows parameter values the classification excludes
    (they are still valid algebras, only redundant in the list).
    """
    e = entry(name)
    p = _normalize_params(params, kw)
    if not e.params:
        if p:
            raise ValueError(f"{name} takes no parameters")
        return _load_concrete(name)
    if e.locus_sign:
        if "t" in p:
            beta, alpha = locus_point(p.pop("t"))
            if (2 * alpha - beta > 0) != (e.locus_sign > 0):
                raise OffLocusError(f"t gives a point on the other branch of the conic for {name}")
            if "beta" in p and p["beta"] != beta:
                raise OffLocusError("t and beta disagree")
            p["beta"] = beta
        if set(p) - {"alpha", "beta"} or "beta" not in p:
            raise ValueError(f"{name} takes the parameter beta")
        beta = p["beta"]
        alpha = locus_alpha(beta, e.locus_sign)
        if "alpha" in p and p["alpha"] != alpha:
            raise OffLocusError(f"alpha = {p['alpha']} is not on the {name} branch at beta = {beta}")
        values = {"beta": beta}
        args = (alpha, beta)
    else:
        missing = [k for k in e.params if k not in p]
        extra = [k for k in p if k not in e.params]
        if missing or extra:
            raise ValueError(f"{name} takes parameters {', '.join(e.params)}")
        values = {k: p[k] for k in e.params}
        args = tuple(values[k] for k in e.params)
    if strict:
        for k, excluded in e.exclusions.items():
            if values[k] in excluded:
                raise ExcludedParameterError(f"{name}: {k} = {values[k]} is excluded")
    label = f"{name}({','.join(str(v) for v in values.values())})"
    return Algebra.from_products(e.dim, e.builder(*args), field=QQ, name=label)


@lru_cache(maxsize=None)
def _load_concrete(name: str) -> Algebra:
    dim, body = _CONCRETE[name]
    return parse_algebra(_doc(name, dim, body))


def is_excluded(name: str, params: Mapping) -> bool:
    e = entry(name)
    p = _normalize_params(params, {})
    return any(p.get(k) in ex for k, ex in e.exclusions.items())


_SINGLE = [F(0), F(1), F(-1), F(2), F(1, 2), F(-2), F(3), F(-1, 2)]
_PAIRS = [(F(0), F(0)), (F(1), F(0)), (F(2), F(1)), (F(0), F(2)), (F(-1), F(3)), (F(1, 2), F(2)), (F(3), F(-1))]


def sample_parameters(family: str, count: int = 3) -> list[dict[str, Fraction]]:
    """Deterministic admissible parameter choices.

    Locus families return ``{"beta": β, "alpha": α}`` with ``α`` derived.
    """
    e = entry(family)
    if not e.params:
        return [{}]
    out: list[dict[str, Fraction]] = []
    if e.locus_sign:
        seen = set()
        for t in _t_values():
            beta, alpha = locus_point(t)
            if (2 * alpha - beta > 0) != (e.locus_sign > 0):
                continue
            if beta in e.exclusions.get("beta", ()) or beta in seen:
                continue
            seen.add(beta)
            out.append({"beta": beta, "alpha": alpha})
            if len(out) >= count:
                return out
    if len(e.params) == 1:
        k = e.params[0]
        for v in _SINGLE:
            if v in e.exclusions.get(k, ()):
                continue
            out.append({k: v})
            if len(out) >= count:
                break
        return out
    for a, b in _PAIRS:
        d = {e.params[0]: a, e.params[1]: b}
        if any(d[k] in ex for k, ex in e.exclusions.items()):
            continue
        if e.name == "A5_05" and (on_locus(a, b) or a5_05_split(a, b)):
            continue
        out.append(d)
        if len(out) >= count:
            break
    return out


def a5_05_split(alpha, beta) -> bool:
    """Whether ``A5_05(α, β)`` has a 2-dimensional annihilator.

    The defining cocycle then pairs trivially with a vector of
    ``Ann(A4_01)``; this happens exactly on ``α(α - β + 1) = β(2 - β)``.
    """
    alpha, beta = QQ(alpha), QQ(beta)
    return alpha * (alpha - beta + 1) == beta * (2 - beta)


def a5_05_locus_samples(count: int = 4) -> list[tuple[Fraction, Fraction]]:
    """``(α, β)`` points of the conic, both branches, plus ``(0, 1/2)`` and ``(1, 1)``."""
    pts = [(F(0), F(1, 2)), (F(1), F(1))]
    for t in _t_values():
        beta, alpha = locus_point(t)
        if (alpha, beta) not in pts:
            pts.append((alpha, beta))
        if len(pts) >= count + 2:
            break
    return pts


def instances(dim: int | None = None, count: int = 3, include_secondary: bool = False) -> list[Algebra]:
    """Every catalog algebra at its default samples."""
    out = []
    for n in names(dim, include_secondary):
        for p in sample_parameters(n, count):
            q = {k: v for k, v in p.items() if not (entry(n).locus_sign and k == "alpha")}
            out.append(catalog_get(n, q))
    return out


__all__ = [
    "CatalogEntry",
    "a5_05_locus_samples",
    "a5_05_split",
    "catalog_get",
    "entry",
    "instances",
    "is_excluded",
    "locus_alpha",
    "locus_discriminant",
    "locus_point",
    "names",
    "on_locus",
    "rational_sqrt",
    "sample_parameters",
]
