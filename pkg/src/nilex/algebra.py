"""Finite-dimensional algebras given by structure constants.

An :class:`Algebra` of dimension ``n`` stores, for every ordered pair of
basis vectors, the coordinate vector of their product.  Basis vectors are
numbered from 1 in user-facing helpers (``a.e(1)``) to match the usual
``e1, ..., en`` notation, and from 0 in internal indexing.

Identities such as the assosymmetric ones are multilinear, so checking
them on all basis triples is equivalent to checking them everywhere.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    BadPrimeError,
    DimensionMismatchError,
    FieldMismatchError,
    NotCentralError,
)
from .fields import GF, QQ, Field, PrimeField, common_field, is_prime
from .linalg import (
    Echelon,
    Matrix,
    Vector,
    complement_in_span,
    kernel_basis,
    span_basis,
    subspace_membership,
    unit_vector,
    vec_sub,
    zero_vector,
)

DEFAULT_SEED = 20200417
MAX_DIM = 16


class Algebra:
    """Structure-constant algebra: ``e_i e_j = sum_k c[i][j][k] e_k``."""

    __slots__ = ("dim", "field", "table", "name", "generator", "_sparse", "_hash")

    def __init__(
        self,
        table: Sequence[Sequence[Sequence]],
        field: Field | None = None,
        name: str | None = None,
        generator: int | None = None,
    ):
        n = len(table)
        if n > MAX_DIM:
            raise DimensionMismatchError(f"dimension {n} exceeds {MAX_DIM}")
        for row in table:
            if len(row) != n or any(len(v) != n for v in row):
                raise DimensionMismatchError("structure tensor must be n x n x n")
        if field is None:
            field = common_field(x for row in table for v in row for x in v)
        else:
            common_field((x for row in table for v in row for x in v), default=field)
        self.dim = n
        self.field = field
        self.table = tuple(tuple(tuple(field(x) for x in v) for v in row) for row in table)
        self.name = name
        self.generator = generator
        self._sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(v) if c) for v in row) for row in self.table
        )
        self._hash = None

    @classmethod
    def from_products(
        cls,
        dim: int,
        products: Mapping[tuple[int, int], Mapping[int, object]],
        field: Field = QQ,
        name: str | None = None,
        generator: int | None = 1,
    ) -> Algebra:
        """Build from 1-based sparse products ``{(i, j): {k: coeff}}``.

        Unlisted products are zero.
        """
        z = field.zero
        table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in products.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise DimensionMismatchError(f"product e{i}*e{j} out of range for dimension {dim}")
            for k, c in terms.items():
                if not 1 <= k <= dim:
                    raise DimensionMismatchError(f"e{k} out of range for dimension {dim}")
                table[i - 1][j - 1][k - 1] = table[i - 1][j - 1][k - 1] + field(c)
        gen = generator - 1 if generator is not None and dim >= 1 else None
        return cls(table, field=field, name=name, generator=gen)

    @classmethod
    def zero(cls, dim: int, field: Field = QQ, name: str | None = None) -> Algebra:
        z = field.zero
        return cls([[[z] * dim for _ in range(dim)] for _ in range(dim)], field=field, name=name)

    def e(self, k: int) -> Vector:
        """The ``k``-th basis vector, 1-based."""
        if not 1 <= k <= self.dim:
            raise DimensionMismatchError(f"e{k} out of range for dimension {self.dim}")
        return unit_vector(k - 1, self.dim, self.field)

    def basis(self) -> list[Vector]:
        return [unit_vector(i, self.dim, self.field) for i in range(self.dim)]

    def vector(self, coords: Sequence) -> Vector:
        if len(coords) != self.dim:
            raise DimensionMismatchError(f"{len(coords)} coordinates for dimension {self.dim}")
        return tuple(self.field(x) for x in coords)

    def zero_vector(self) -> Vector:
        return zero_vector(self.dim, self.field)

    def products(self) -> dict[tuple[int, int], dict[int, object]]:
        """Nonzero products as a 1-based sparse dictionary."""
        out = {}
        for i in range(self.dim):
            for j in range(self.dim):
                terms = {k + 1: c for k, c in self._sparse[i][j]}
                if terms:
                    out[(i + 1, j + 1)] = terms
        return out

    def renamed(self, name: str | None) -> Algebra:
        return Algebra(self.table, self.field, name=name, generator=self.generator)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.dim == other.dim and self.field == other.field and self.table == other.table

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.field, self.table))
        return self._hash

    def __repr__(self):
        label = self.name or "Algebra"
        return f"<{label} dim={self.dim} over {self.field!r}>"

    def __getstate__(self):
        return (self.table, self.field, self.name, self.generator)

    def __setstate__(self, state):
        table, fld, name, gen = state
        Algebra.__init__(self, table, field=fld, name=name, generator=gen)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exhaustive identity check over basis elements.

    Truthy iff the check passed; otherwise ``location`` holds the first
    failing basis indices (1-based) and ``lhs``/``rhs`` the two sides.
    """

    ok: bool
    location: tuple | None = None
    lhs: Vector | None = None
    rhs: Vector | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


PASS = CheckResult(True)


def _check_vec(a: Algebra, v: Sequence) -> None:
    if len(v) != a.dim:
        raise DimensionMismatchError(f"vector of length {len(v)} in algebra of dimension {a.dim}")


def multiply(a: Algebra, x: Sequence, y: Sequence) -> Vector:
    _check_vec(a, x)
    _check_vec(a, y)
    zero = a.field.zero
    acc = [zero] * a.dim
    sparse = a._sparse
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = sparse[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            terms = row[j]
            if not terms:
                continue
            c = xi * yj
            for k, v in terms:
                acc[k] = acc[k] + c * v
    return tuple(acc)


def associator(a: Algebra, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """``(xy)z - x(yz)``."""
    return vec_sub(multiply(a, multiply(a, x, y), z), multiply(a, x, multiply(a, y, z)))


def _basis_associators(a: Algebra) -> list[list[list[Vector]]]:
    n = a.dim
    basis = a.basis()
    table = a.table
    return [
        [
            [vec_sub(multiply(a, table[i][j], basis[k]), multiply(a, basis[i], table[j][k])) for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]


def check_assosymmetric(a: Algebra) -> CheckResult:
    """Check ``(x,y,z) = (x,z,y)`` and ``(x,y,z) = (y,x,z)`` on all basis triples."""
    n = a.dim
    assoc = _basis_associators(a)
    for i, j, k in itertools.product(range(n), repeat=3):
        here = assoc[i][j][k]
        if here != assoc[i][k][j]:
            return CheckResult(
                False,
                (i + 1, j + 1, k + 1),
                here,
                assoc[i][k][j],
                f"(e{i + 1},e{j + 1},e{k + 1}) != (e{i + 1},e{k + 1},e{j + 1})",
            )
        if here != assoc[j][i][k]:
            return CheckResult(
                False,
                (i + 1, j + 1, k + 1),
                here,
                assoc[j][i][k],
                f"(e{i + 1},e{j + 1},e{k + 1}) != (e{j + 1},e{i + 1},e{k + 1})",
            )
    return PASS


@dataclass(frozen=True)
class PowerSequence:
    dims: tuple[int, ...]
    nilpotent: bool

    @property
    def index(self) -> int | None:
        """Smallest ``k`` with ``A^k = 0``."""
        return len(self.dims) if self.nilpotent else None


def _span_products(a: Algebra, left: Sequence[Vector], right: Sequence[Vector], ech: Echelon) -> None:
    for u in left:
        for v in right:
            ech.add(multiply(a, u, v))


def power_sequence(a: Algebra) -> PowerSequence:
    """Dimensions of ``A^1 ⊇ A^2 ⊇ ...`` with ``A^k = sum_{i+j=k} A^i A^j``.

    Stops at the first zero term or after ``dim + 1`` terms.
    """
    n = a.dim
    powers: dict[int, list[Vector]] = {1: a.basis()}
    dims = [n]
    if n == 0:
        return PowerSequence((0,), True)
    for k in range(2, n + 2):
        ech = Echelon(n, a.field)
        for i in range(1, k):
            _span_products(a, powers[i], powers[k - i], ech)
        powers[k] = ech.basis()
        dims.append(len(powers[k]))
        if not powers[k]:
            return PowerSequence(tuple(dims), True)
    return PowerSequence(tuple(dims), False)


def square_span(a: Algebra) -> list[Vector]:
    """Basis of ``A·A``."""
    return span_basis([v for row in a.table for v in row], a.dim, a.field)


def _joint_kernel(a: Algebra, left: bool, right: bool) -> list[Vector]:
    n = a.dim
    if n == 0:
        return []
    rows = []
    table = a.table
    for j in range(n):
        for k in range(n):
            if left:
                rows.append([table[i][j][k] for i in range(n)])
            if right:
                rows.append([table[j][i][k] for i in range(n)])
    return kernel_basis(Matrix(rows, ncols=n, field=a.field))


def annihilator(a: Algebra) -> list[Vector]:
    """Basis of ``{x : xA = Ax = 0}``."""
    return _joint_kernel(a, left=True, right=True)


def left_annihilator(a: Algebra) -> list[Vector]:
    """Basis of ``{x : xA = 0}``."""
    return _joint_kernel(a, left=True, right=False)


def right_annihilator(a: Algebra) -> list[Vector]:
    """Basis of ``{x : Ax = 0}``."""
    return _joint_kernel(a, left=False, right=True)


@dataclass(frozen=True)
class GeneratorPlan:
    """A basis built from one generator by repeated products.

    ``trees[0]`` is ``None`` (the generator itself); ``trees[k] = (i, j)``
    records ``basis[k] = basis[i] * basis[j]`` with ``i, j < k``.  Unfolding
    the references gives a binary tree whose leaves are all the generator.
    """

    generator: Vector
    basis: tuple[Vector, ...]
    trees: tuple[tuple[int, int] | None, ...]

    def evaluate(self, b: Algebra, image: Sequence) -> list[Vector]:
        """Values of every tree when the generator is replaced by ``image`` in ``b``."""
        values: list[Vector] = []
        for node in self.trees:
            if node is None:
                values.append(tuple(b.field(x) for x in image))
            else:
                i, j = node
                values.append(multiply(b, values[i], values[j]))
        return values

    def word(self, k: int) -> str:
        node = self.trees[k]
        if node is None:
            return "g"
        i, j = node
        return f"({self.word(i)} {self.word(j)})"

    def basis_matrix(self, field: Field) -> Matrix:
        return Matrix.from_columns(self.basis, nrows=len(self.generator), field=field)


def generated_subalgebra(a: Algebra, x: Sequence) -> tuple[list[Vector], GeneratorPlan | None]:
    """Closure of ``span{x}`` under the product.

    Returns a basis of the generated subalgebra and, when it is the whole
    algebra, a :class:`GeneratorPlan` recording how each basis vector arises.
    """
    _check_vec(a, x)
    x = tuple(a.field(c) for c in x)
    if not any(x):
        raise ValueError("the zero vector generates nothing")
    n = a.dim
    ech = Echelon(n, a.field)
    ech.add(x)
    elems: list[Vector] = [x]
    trees: list[tuple[int, int] | None] = [None]
    k = 0
    while k < len(elems) and len(elems) < n:
        for i in range(k + 1):
            pairs = [(i, k)] if i == k else [(i, k), (k, i)]
            for p, q in pairs:
                prod = multiply(a, elems[p], elems[q])
                if ech.add(prod):
                    elems.append(prod)
                    trees.append((p, q))
        k += 1
    plan = None
    if len(elems) == n:
        plan = GeneratorPlan(x, tuple(elems), tuple(trees))
    return elems, plan


@dataclass(frozen=True)
class GenerationResult:
    """Outcome of a one-generator search.

    ``witness is None`` with ``exhaustive`` set means no generator exists
    (a proof, only possible over a finite field); without ``exhaustive`` it
    only means none was found.
    """

    witness: Vector | None
    plan: GeneratorPlan | None
    exhaustive: bool
    tried: int
    seed: int

    def __bool__(self):
        return self.witness is not None


def _candidate_vectors(a: Algebra, seed: int, random_trials: int, max_combos: int, exhaustive: bool):
    n = a.dim
    f = a.field
    if a.generator is not None:
        yield a.e(a.generator + 1)
    for k in range(1, n + 1):
        yield a.e(k)
    if exhaustive:
        elems = list(range(f.characteristic))
        for coords in itertools.product(elems, repeat=n):
            if any(coords):
                yield tuple(f(c) for c in coords)
        return
    count = 0
    for weight in range(2, n + 1):
        for support in itertools.combinations(range(n), weight):
            if count >= max_combos:
                break
            count += 1
            yield tuple(f.one if i in support else f.zero for i in range(n))
    rng = random.Random(seed)
    for _ in range(random_trials):
        v = tuple(f(rng.randint(-5, 5)) for _ in range(n))
        if any(v):
            yield v


def is_one_generated(
    a: Algebra,
    seed: int = DEFAULT_SEED,
    random_trials: int = 32,
    max_combos: int = 4096,
    exhaustive: bool = False,
) -> GenerationResult:
    """Search for a single generator of ``a``.

    Tries the declared generator, each basis vector, 0/1 combinations and
    then seeded random vectors.  With ``exhaustive=True`` over GF(p) every
    nonzero vector is tried instead, so a negative answer is a proof.
    """
    if exhaustive and not isinstance(a.field, PrimeField):
        raise ValueError("exhaustive generator search needs a finite field")
    if a.dim == 0:
        return GenerationResult(None, None, exhaustive, 0, seed)
    # a generator must avoid A·A whenever A is nilpotent; cheap pre-filter
    sq = Echelon(a.dim, a.field)
    for v in square_span(a):
        sq.add(v)
    skip_square = power_sequence(a).nilpotent
    tried = 0
    seen = set()
    for v in _candidate_vectors(a, seed, random_trials, max_combos, exhaustive):
        if v in seen:
            continue
        seen.add(v)
        tried += 1
        if skip_square and sq.contains(v):
            continue
        _, plan = generated_subalgebra(a, v)
        if plan is not None:
            return GenerationResult(v, plan, exhaustive, tried, seed)
    return GenerationResult(None, None, exhaustive, tried, seed)


def is_homomorphism(a: Algebra, b: Algebra, m: Matrix) -> CheckResult:
    """Check ``m(e_i e_j) = m(e_i) m(e_j)``; the columns of ``m`` are images of ``a``'s basis."""
    if m.shape != (b.dim, a.dim):
        raise DimensionMismatchError(f"map of shape {m.shape} between dimensions {a.dim} -> {b.dim}")
    if not (a.field == b.field == m.field):
        raise FieldMismatchError(f"{a.field!r}, {b.field!r}, {m.field!r}")
    images = m.columns()
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = m.apply(a.table[i][j])
            rhs = multiply(b, images[i], images[j])
            if lhs != rhs:
                return CheckResult(False, (i + 1, j + 1), lhs, rhs, f"m(e{i + 1}e{j + 1}) != m(e{i + 1})m(e{j + 1})")
    return PASS


def base_change(a: Algebra, m: Matrix) -> Algebra:
    """The algebra on the same space for which ``m`` is an isomorphism from ``a``.

    Its product is ``u * v = m(m^-1 u · m^-1 v)``.
    """
    if m.shape != (a.dim, a.dim):
        raise DimensionMismatchError(f"change of basis of shape {m.shape} for dimension {a.dim}")
    if m.field != a.field:
        raise FieldMismatchError(f"{a.field!r} vs {m.field!r}")
    minv = m.inverse()  # raises SingularMatrixError
    cols = minv.columns()
    table = [[m.apply(multiply(a, cols[i], cols[j])) for j in range(a.dim)] for i in range(a.dim)]
    return Algebra(table, field=a.field, name=a.name)


def reduce_mod_p(a: Algebra, p: int) -> Algebra:
    """Entrywise reduction of a rational algebra to GF(p)."""
    if a.field != QQ:
        raise FieldMismatchError(f"can only reduce rational algebras, got {a.field!r}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    for row in a.table:
        for v in row:
            for c in v:
                if c.denominator % p == 0:
                    raise BadPrimeError(f"structure constant {c} has a denominator divisible by {p}")
    fp = GF(p)
    name = f"{a.name} mod {p}" if a.name else None
    return Algebra([[[fp(c) for c in v] for v in row] for row in a.table], field=fp, name=name, generator=a.generator)


def quotient_by_central_subspace(a: Algebra, u: Sequence[Sequence]) -> Algebra:
    """``A/U`` for a subspace ``U`` of the annihilator.

    The quotient basis is the greedy complement of ``U`` among the standard
    basis vectors, in their original order.
    """
    n = a.dim
    u = span_basis(u, n, a.field) if u else []
    ann = Echelon(n, a.field)
    for v in annihilator(a):
        ann.add(v)
    for v in u:
        if not ann.contains(v):
            raise NotCentralError("subspace is not contained in the annihilator")
    reps = complement_in_span(a.basis(), u)
    full = list(reps) + list(u)
    m = len(reps)
    table = []
    for x in reps:
        row = []
        for y in reps:
            coords = subspace_membership(full, multiply(a, x, y))
            row.append(coords[:m])
        table.append(row)
    return Algebra(table, field=a.field, name=f"{a.name}/U" if a.name else None, generator=0 if m else None)


__all__ = [
    "Algebra",
    "CheckResult",
    "DEFAULT_SEED",
    "GenerationResult",
    "GeneratorPlan",
    "PowerSequence",
    "annihilator",
    "associator",
    "base_change",
    "check_assosymmetric",
    "generated_subalgebra",
    "is_homomorphism",
    "is_one_generated",
    "left_annihilator",
    "multiply",
    "power_sequence",
    "quotient_by_central_subspace",
    "reduce_mod_p",
    "right_annihilator",
    "square_span",
]
