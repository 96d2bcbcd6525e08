"""Isomorphism testing for one-generated algebras.

A homomorphism out of a one-generated algebra is fixed by the image of
the generator: every other basis vector is a product word in the
generator, so its image is the same word evaluated at the image.  The
searches here enumerate generator images.  Over GF(p) the enumeration is
complete, so failure is a proof over that field.  Over the rationals only
witnesses are conclusive.

Two reductions keep the enumeration small when the source is nilpotent:

* the images of all product words ignore any component of the generator
  image lying in ``Ann(B)``, and so do the homomorphism conditions, so the
  search runs over a complement of ``Ann(B)`` and repairs invertibility
  afterwards (the determinant is affine in that component);
* a generator image inside ``B²`` can never give an invertible map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .algebra import (
    Algebra,
    GeneratorPlan,
    annihilator,
    generated_subalgebra,
    is_homomorphism,
    is_one_generated,
    left_annihilator,
    power_sequence,
    reduce_mod_p,
    right_annihilator,
    square_span,
)
from .cohomology import cohomology_basis
from .errors import (
    BadPrimeError,
    DimensionMismatchError,
    FieldMismatchError,
    IsomorphismFailure,
    MissingPlanError,
)
from .fields import GF, QQ, Field, PrimeField
from .linalg import (
    Echelon,
    Matrix,
    Vector,
    complement_in_span,
    kernel_basis,
    rational_reconstruction,
    span_basis,
    vec_add,
)

DEFAULT_PRIMES = (5, 7)
DEFAULT_HEIGHT_BOUND = 4
FILTER_PRIME = 1000003
CHUNK = 1 << 16


# ---------------------------------------------------------------- fingerprints


@dataclass(frozen=True)
class Fingerprint:
    """Ranks and dimensions that survive base change and field extension."""

    dim: int
    powers: tuple[int, ...]
    ann: int
    left_ann: int
    right_ann: int
    square: int
    cohomology: tuple[int, int, int]
    sym_rank: int
    antisym_rank: int

    def diff(self, other: Fingerprint) -> list[str]:
        return [k for k in self.__dataclass_fields__ if getattr(self, k) != getattr(other, k)]

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "powers": list(self.powers),
            "ann": self.ann,
            "left_ann": self.left_ann,
            "right_ann": self.right_ann,
            "square": self.square,
            "cohomology": list(self.cohomology),
            "sym_rank": self.sym_rank,
            "antisym_rank": self.antisym_rank,
        }


@lru_cache(maxsize=1024)
def fingerprint(a: Algebra) -> Fingerprint:
    n = a.dim
    t = a.table
    sym = [tuple(x + y for x, y in zip(t[i][j], t[j][i])) for i in range(n) for j in range(i, n)]
    anti = [tuple(x - y for x, y in zip(t[i][j], t[j][i])) for i in range(n) for j in range(i + 1, n)]
    return Fingerprint(
        dim=n,
        powers=power_sequence(a).dims,
        ann=len(annihilator(a)),
        left_ann=len(left_annihilator(a)),
        right_ann=len(right_annihilator(a)),
        square=len(square_span(a)),
        cohomology=cohomology_basis(a).dims,
        sym_rank=len(span_basis(sym, n, a.field)),
        antisym_rank=len(span_basis(anti, n, a.field)),
    )


# ---------------------------------------------------------------- witnesses


@dataclass(frozen=True)
class IsoWitness:
    """An invertible multiplicative map; column ``i`` is the image of ``e_{i+1}``."""

    matrix: Matrix
    source: str | None
    target: str | None

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "field": repr(self.matrix.field),
            "matrix": [[str(x) for x in row] for row in self.matrix.rows],
        }


def verify_witness(a: Algebra, b: Algebra, m: Matrix) -> IsoWitness:
    """Return the witness if ``m`` is an isomorphism ``a -> b``, else raise."""
    if a.dim != b.dim:
        raise IsomorphismFailure(f"dimensions differ: {a.dim} vs {b.dim}")
    if not m.is_invertible():
        raise IsomorphismFailure("map is not invertible")
    res = is_homomorphism(a, b, m)
    if not res:
        raise IsomorphismFailure(f"not multiplicative at {res.location}")
    return IsoWitness(m, a.name, b.name)


@lru_cache(maxsize=512)
def generator_plan(a: Algebra) -> GeneratorPlan:
    """Plan from the declared generator, falling back to a witness search."""
    if a.dim == 0:
        raise MissingPlanError("the zero-dimensional algebra has no generator")
    if a.generator is not None:
        _, plan = generated_subalgebra(a, a.e(a.generator + 1))
        if plan is not None:
            return plan
    res = is_one_generated(a)
    if res.plan is None:
        raise MissingPlanError(f"{a.name or 'algebra'}: no generator found")
    return res.plan


def _map_from_plan(a: Algebra, b: Algebra, plan: GeneratorPlan, image: Sequence) -> Matrix:
    values = plan.evaluate(b, image)
    v = Matrix.from_columns(values, nrows=b.dim, field=b.field)
    p = plan.basis_matrix(a.field)
    if p == Matrix.identity(a.dim, a.field):
        return v
    return v @ p.inverse()


def iso_by_generator_image(
    a: Algebra, b: Algebra, image: Sequence, plan: GeneratorPlan | None = None
) -> IsoWitness:
    """Extend ``generator -> image`` multiplicatively and certify the result."""
    if a.dim != b.dim:
        raise IsomorphismFailure(f"dimensions differ: {a.dim} vs {b.dim}")
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    if len(image) != b.dim:
        raise DimensionMismatchError(f"image of length {len(image)} in dimension {b.dim}")
    if plan is None:
        plan = generator_plan(a)
    image = tuple(b.field(x) for x in image)
    return verify_witness(a, b, _map_from_plan(a, b, plan, image))


# ---------------------------------------------------------------- batched engine


def _residue(x, q: int) -> int:
    if isinstance(x, Fraction):
        if x.denominator % q == 0:
            raise BadPrimeError(f"{x} has denominator divisible by {q}")
        return x.numerator * pow(x.denominator, -1, q) % q
    return int(x) % q


def _tensor(alg: Algebra, q: int) -> np.ndarray:
    n = alg.dim
    c = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k, v in alg._sparse[i][j]:
                c[i, j, k] = _residue(v, q)
    return c


class _Engine:
    """Vectorized homomorphism filter for many generator images at once, mod ``q``."""

    def __init__(self, a: Algebra, b: Algebra, plan: GeneratorPlan, q: int):
        self.n = n = a.dim
        self.q = q
        self.trees = plan.trees
        self.cb = _tensor(b, q).reshape(n, n * n)
        self.ca = _tensor(a, q)
        pmat = plan.basis_matrix(a.field)
        if pmat == Matrix.identity(n, a.field):
            self.pinv = None
        else:
            self.pinv = np.array([[_residue(x, q) for x in row] for row in pmat.inverse().rows], dtype=np.int64)

    def product(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        q, n = self.q, self.n
        w = (u @ self.cb) % q
        w = w.reshape(-1, n, n)
        return np.einsum("nb,nbc->nc", v, w) % q

    def images(self, x: np.ndarray) -> np.ndarray:
        """``(N, n, n)`` array; ``[:, :, i]`` is the image of ``e_{i+1}``."""
        values = []
        for node in self.trees:
            if node is None:
                values.append(x % self.q)
            else:
                i, j = node
                values.append(self.product(values[i], values[j]))
        m = np.stack(values, axis=2)
        if self.pinv is not None:
            m = (m @ self.pinv) % self.q
        return m

    def filter(self, x: np.ndarray) -> np.ndarray:
        """Indices of rows of ``x`` whose induced map is multiplicative mod ``q``."""
        q, n = self.q, self.n
        m = self.images(x)
        idx = np.arange(len(x))
        for i in range(n):
            for j in range(n):
                if not len(idx):
                    return idx
                mm = m[idx]
                lhs = np.einsum("nck,k->nc", mm, self.ca[i, j]) % q
                rhs = self.product(mm[:, :, i], mm[:, :, j])
                keep = np.all(lhs == rhs, axis=1)
                idx = idx[keep]
        return idx


def _left_kernel_rows(vectors: Sequence[Vector], n: int, fld: Field) -> list[Vector]:
    """Functionals vanishing exactly on ``span(vectors)``."""
    if not vectors:
        return [tuple(fld.one if i == j else fld.zero for i in range(n)) for j in range(n)]
    return kernel_basis(Matrix(list(vectors), ncols=n, field=fld))


@dataclass
class _Reduction:
    """Search coordinates and filters derived from ``Ann(B)`` and ``B²``."""

    free: list[int]
    ann: list[Vector]
    square_test: list[Vector] | None


def _reduction(a: Algebra, b: Algebra, plan: GeneratorPlan) -> _Reduction:
    n = b.dim
    nilpotent = power_sequence(a).nilpotent
    sq_a = Echelon(n, a.field)
    for v in square_span(a):
        sq_a.add(v)
    if not nilpotent or sq_a.contains(plan.generator):
        return _Reduction(list(range(n)), [], None)
    ann = annihilator(b)
    comp = complement_in_span(b.basis(), ann)
    free = [v.index(b.field.one) for v in comp]
    sq_b = square_span(b)
    ech = Echelon(n, b.field)
    for v in sq_b:
        ech.add(v)
    square_test = _left_kernel_rows(sq_b, n, b.field) if all(ech.contains(v) for v in ann) else None
    return _Reduction(free, ann, square_test)


def _repair(a: Algebra, b: Algebra, plan: GeneratorPlan, x: Vector, ann: Sequence[Vector]) -> IsoWitness | None:
    """Try ``x + u`` for ``u`` in ``{0} ∪ basis(Ann(B))``."""
    for u in [None, *ann]:
        cand = x if u is None else vec_add(x, u)
        try:
            return iso_by_generator_image(a, b, cand, plan)
        except IsomorphismFailure:
            continue
    return None


def _candidate_stream(values: Sequence[int], free: list[int], n: int, q: int, chunk: int = CHUNK):
    """All vectors with coordinates from ``values`` on ``free`` and zero elsewhere, in chunks."""
    k = len(free)
    vals = np.asarray(values, dtype=np.int64)
    total = len(vals) ** k
    for start in range(0, total, chunk):
        stop = min(total, start + chunk)
        flat = np.arange(start, stop, dtype=np.int64)
        x = np.zeros((stop - start, n), dtype=np.int64)
        for pos in range(k - 1, -1, -1):
            x[:, free[pos]] = vals[flat % len(vals)] % q
            flat //= len(vals)
        yield x


def _square_mask(x: np.ndarray, test: list[Vector] | None, q: int) -> np.ndarray:
    if test is None:
        return np.ones(len(x), dtype=bool)
    t = np.array([[_residue(c, q) for c in row] for row in test], dtype=np.int64)
    return np.any((x @ t.T) % q != 0, axis=1)


# ---------------------------------------------------------------- F_p search


@dataclass
class FpSearchResult:
    """Outcome of an exhaustive generator-image search over GF(p)."""

    p: int
    witness: IsoWitness | None
    candidates: int
    homomorphisms: int
    exhaustive: bool = True
    note: str = ""
    all_images: list[Vector] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "found": self.found,
            "exhaustive": self.exhaustive,
            "candidates": self.candidates,
            "homomorphisms": self.homomorphisms,
            "note": self.note,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def _to_fp(a: Algebra, p: int) -> Algebra:
    if isinstance(a.field, PrimeField):
        if a.field.p != p:
            raise FieldMismatchError(f"{a.field!r} vs GF({p})")
        return a
    return reduce_mod_p(a, p)


def iso_search_fp(
    a: Algebra,
    b: Algebra,
    p: int,
    collect: bool = False,
    stop_at_first: bool = True,
) -> FpSearchResult:
    """Enumerate every generator image in ``b`` mod ``p``.

    ``collect`` keeps the (Ann-reduced) images of every homomorphism found,
    which the rational lifting strategy uses.
    """
    if p in (2, 3):
        raise BadPrimeError(f"characteristic {p} is excluded")
    ap, bp = _to_fp(a, p), _to_fp(b, p)
    if ap.dim != bp.dim:
        return FpSearchResult(p, None, 0, 0, note="dimensions differ")
    plan = generator_plan(ap)
    red = _reduction(ap, bp, plan)
    eng = _Engine(ap, bp, plan, p)
    fp = GF(p)
    n = bp.dim
    seen = homs = 0
    images: list[Vector] = []
    witness = None
    for x in _candidate_stream(range(p), red.free, n, p):
        seen += len(x)
        x = x[_square_mask(x, red.square_test, p)]
        if not len(x):
            continue
        for r in eng.filter(x):
            homs += 1
            vec = tuple(fp(int(c)) for c in x[r])
            w = _repair(ap, bp, plan, vec, red.ann)
            if w is None:
                continue
            if collect:
                images.append(vec)
            if witness is None:
                witness = w
            if stop_at_first and not collect:
                return FpSearchResult(p, witness, seen, homs, exhaustive=False)
    return FpSearchResult(p, witness, seen, homs, exhaustive=True, all_images=images)


# ---------------------------------------------------------------- rational search


def _height(x: Fraction) -> int:
    return max(abs(x.numerator), x.denominator)


@lru_cache(maxsize=None)
def rationals_of_height(h: int) -> tuple[Fraction, ...]:
    """All rationals ``p/q`` in lowest terms with ``max(|p|, q) <= h``, ordered by height."""
    out = {Fraction(0)}
    for q in range(1, h + 1):
        for p in range(0, h + 1):
            if math.gcd(p, q) == 1:
                out.add(Fraction(p, q))
                out.add(Fraction(-p, q))
    return tuple(sorted(out, key=lambda x: (_height(x), abs(x), x < 0)))


@dataclass
class RationalSearchResult:
    witness: IsoWitness | None
    strategy: str | None
    candidates: int
    height_bound: int
    exhausted_bound: bool
    fp_results: list[FpSearchResult] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "strategy": self.strategy,
            "candidates": self.candidates,
            "height_bound": self.height_bound,
            "exhausted_bound": self.exhausted_bound,
            "witness": self.witness.to_dict() if self.witness else None,
            "finite_fields": [r.to_dict() for r in self.fp_results],
        }


def _height_levels(k: int, bound: int, budget: int):
    """Index batches level by level; level ``h`` has maximal height exactly ``h``.

    Yields ``(h, values, idx)`` with ``idx`` an integer array of shape
    ``(N, k)`` indexing into ``values``, then ``(h, None, None)`` when the
    level is complete.  Stops before a level whose cube exceeds ``budget``.
    """
    for h in range(1, bound + 1):
        vals = rationals_of_height(h)
        size = len(vals) ** k
        if size > budget:
            return
        is_new = np.array([h == 1 or _height(v) == h for v in vals])
        if k == 0:
            if h == 1:
                yield h, vals, np.zeros((1, 0), dtype=np.int64)
            yield h, None, None
            continue
        rest = np.indices((len(vals),) * (k - 1)).reshape(k - 1, -1).T
        rest_new = is_new[rest].any(axis=1) if k > 1 else np.zeros(1, dtype=bool)
        for first in range(len(vals)):
            sel = rest if is_new[first] else rest[rest_new]
            if not len(sel):
                continue
            for start in range(0, len(sel), CHUNK):
                part = sel[start : start + CHUNK]
                idx = np.empty((len(part), k), dtype=np.int64)
                idx[:, 0] = first
                idx[:, 1:] = part
                yield h, vals, idx
        yield h, None, None


def iso_search_rational(
    a: Algebra,
    b: Algebra,
    height_bound: int = DEFAULT_HEIGHT_BOUND,
    primes: Iterable[int] = DEFAULT_PRIMES,
    budget: int = 4_000_000,
    lift_budget: int = 200_000,
) -> RationalSearchResult:
    """Look for an isomorphism defined over the rationals.

    Strategy 1 enumerates generator images of bounded height, filters them
    mod a large prime and verifies survivors exactly.  Strategy 2 collects
    every GF(p) witness for primes small enough to enumerate, lifts the
    coordinates by rational reconstruction and verifies exactly.  A
    negative answer is not a proof; the exhaustive GF(p) outcomes for
    ``primes`` are attached as supporting evidence.
    """
    if a.field != QQ or b.field != QQ:
        raise FieldMismatchError("rational search needs two rational algebras")
    if a.dim != b.dim:
        return RationalSearchResult(None, None, 0, height_bound, True)
    plan = generator_plan(a)
    red = _reduction(a, b, plan)
    n = b.dim
    q = FILTER_PRIME
    eng = _Engine(a, b, plan, q)
    seen = 0
    finished = 0
    tried = set()
    for h, vals, idx in _height_levels(len(red.free), height_bound, budget):
        if vals is None:
            finished = h
            continue
        res = np.array([_residue(v, q) for v in vals], dtype=np.int64)
        x = np.zeros((len(idx), n), dtype=np.int64)
        x[:, red.free] = res[idx]
        seen += len(idx)
        mask = _square_mask(x, red.square_test, q)
        idx, x = idx[mask], x[mask]
        for r in eng.filter(x):
            vec = [QQ.zero] * n
            for pos, c in zip(red.free, idx[r]):
                vec[pos] = vals[c]
            vec = tuple(vec)
            if vec in tried:
                continue
            tried.add(vec)
            w = _repair(a, b, plan, vec, red.ann)
            if w is not None:
                return RationalSearchResult(w, f"height<={h}", seen, height_bound, finished >= height_bound)
    exhausted = finished >= height_bound

    # strategy 2: lift GF(p) witnesses
    for p in (11, 13, 17, 19, 23):
        if p ** len(red.free) > lift_budget:
            break
        try:
            fr = iso_search_fp(a, b, p, collect=True)
        except BadPrimeError:
            continue
        bound = math.isqrt((p - 1) // 2)
        for img in fr.all_images:
            lifted = [rational_reconstruction(int(c), p, bound) for c in img]
            if any(c is None for c in lifted):
                continue
            w = _repair(a, b, plan, tuple(lifted), red.ann)
            if w is not None:
                return RationalSearchResult(w, f"lifted from GF({p})", seen, height_bound, exhausted)

    evidence = []
    for p in primes:
        try:
            evidence.append(iso_search_fp(a, b, p))
        except BadPrimeError as exc:
            evidence.append(FpSearchResult(p, None, 0, 0, exhaustive=False, note=str(exc)))
    return RationalSearchResult(None, None, seen, height_bound, exhausted, evidence)


# ---------------------------------------------------------------- certificates


@dataclass
class NonIsoCertificate:
    """Why two algebras are (believed) non-isomorphic.

    ``kind`` is one of ``dimension``, ``fingerprint``, ``finite-field`` or
    ``none``.  Only the first two are valid over every extension field;
    ``finite-field`` is heuristic for the complex numbers since a complex
    isomorphism need not reduce to a GF(p) one.
    """

    kind: str
    validity: str
    details: dict
    fp_results: list[FpSearchResult] = field(default_factory=list)

    @property
    def separated(self) -> bool:
        return self.kind != "none"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "validity": self.validity,
            "details": self.details,
            "finite_fields": [r.to_dict() for r in self.fp_results],
        }


def certify_noniso(
    a: Algebra,
    b: Algebra,
    primes: Iterable[int] = DEFAULT_PRIMES,
    use_fingerprint: bool = True,
) -> NonIsoCertificate:
    """Try the fingerprint first, then exhaustive search over each prime.

    ``use_fingerprint=False`` skips straight to the finite-field searches,
    which is how a finite-field certificate is obtained for a pair that a
    fingerprint already separates.
    """
    if a.dim != b.dim:
        return NonIsoCertificate("dimension", "every field", {"dims": [a.dim, b.dim]})
    fa, fb = fingerprint(a), fingerprint(b)
    diff = fa.diff(fb)
    if diff and use_fingerprint:
        return NonIsoCertificate(
            "fingerprint",
            "every extension field",
            {k: [_jsonable(getattr(fa, k)), _jsonable(getattr(fb, k))] for k in diff},
        )
    results = []
    for p in primes:
        try:
            r = iso_search_fp(a, b, p)
        except BadPrimeError as exc:
            results.append(FpSearchResult(p, None, 0, 0, exhaustive=False, note=str(exc)))
            continue
        results.append(r)
        if r.found:
            return NonIsoCertificate("none", "isomorphic over GF(%d)" % p, {"prime": p}, results)
    if results and all(r.exhaustive and not r.found for r in results):
        return NonIsoCertificate(
            "finite-field",
            "heuristic for C",
            {"primes": [r.p for r in results]},
            results,
        )
    return NonIsoCertificate("none", "inconclusive", {}, results)


def _jsonable(v):
    return list(v) if isinstance(v, tuple) else v


__all__ = [
    "DEFAULT_HEIGHT_BOUND",
    "DEFAULT_PRIMES",
    "Fingerprint",
    "FpSearchResult",
    "IsoWitness",
    "NonIsoCertificate",
    "RationalSearchResult",
    "certify_noniso",
    "fingerprint",
    "generator_plan",
    "iso_by_generator_image",
    "iso_search_fp",
    "iso_search_rational",
    "rationals_of_height",
    "verify_witness",
]
