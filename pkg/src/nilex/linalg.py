"""Dense exact linear algebra over QQ and GF(p).

Vectors are tuples of field elements; :class:`Matrix` is an immutable
row-major container.  Every routine is exact, so rank and kernel
computations carry no tolerance.  Pivoting is leftmost column, first
usable row, which makes every echelon form (and everything derived from it)
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, FieldMismatchError, NotInSpanError, SingularMatrixError
from .fields import QQ, Field, common_field

Vector = tuple


class Matrix:
    """Immutable matrix whose entries all live in one field."""

    __slots__ = ("rows", "nrows", "ncols", "field", "_hash")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None, field: Field | None = None):
        rows = [tuple(r) for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionMismatchError("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatchError(f"ragged row of length {len(r)}, expected {ncols}")
        if field is None:
            field = common_field(x for r in rows for x in r)
        else:
            # validates mixed inputs as a side effect
            common_field((x for r in rows for x in r), default=field)
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, ncols: int, field: Field) -> Matrix:
        m = object.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m.field = field
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field = QQ) -> Matrix:
        z = field.zero
        return cls._raw(tuple((z,) * ncols for _ in range(nrows)), ncols, field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> Matrix:
        return cls._raw(tuple(unit_vector(i, n, field) for i in range(n)), n, field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None, field: Field | None = None) -> Matrix:
        columns = [tuple(c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        return cls([tuple(c[i] for c in columns) for i in range(nrows)], ncols=len(columns), field=field)

    @classmethod
    def diagonal(cls, entries: Sequence, field: Field | None = None) -> Matrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n, field=field)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> Matrix:
        return Matrix._raw(tuple(self.columns()), self.nrows, self.field)

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.nrows}x{self.ncols} matrix")
        z = self.field.zero
        out = []
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatchError(f"{self.shape} @ {other.shape}")
            _check_same_field(self.field, other.field)
            cols = other.columns()
            z = self.field.zero
            rows = []
            for r in self.rows:
                out = []
                for c in cols:
                    s = z
                    for a, b in zip(r, c):
                        if a and b:
                            s = s + a * b
                    out.append(s)
                rows.append(tuple(out))
            return Matrix._raw(tuple(rows), other.ncols, self.field)
        return self.apply(other)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} + {other.shape}")
        _check_same_field(self.field, other.field)
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
            self.field,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other * -1

    def __mul__(self, scalar) -> Matrix:
        c = self.field(scalar)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.ncols, self.field)

    __rmul__ = __mul__

    def __neg__(self) -> Matrix:
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.ncols, self.field))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols} over {self.field!r}]({body})"

    def map(self, f, field: Field) -> Matrix:
        return Matrix([[f(x) for x in r] for r in self.rows], ncols=self.ncols, field=field)

    def flatten(self) -> Vector:
        return tuple(x for r in self.rows for x in r)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def rank(self) -> int:
        return rref(self)[2]

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> Matrix:
        if self.nrows != self.ncols:
            raise DimensionMismatchError("only square matrices are invertible")
        n = self.nrows
        one, zero = self.field.one, self.field.zero
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        red, pivots = _rref_rows(aug, 2 * n, one)
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix._raw(tuple(tuple(r[n:]) for r in red), n, self.field)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]


def _check_same_field(f: Field, g: Field) -> None:
    if f != g:
        raise FieldMismatchError(f"{f!r} vs {g!r}")


# -- vectors ---------------------------------------------------------------


def zero_vector(n: int, field: Field = QQ) -> Vector:
    return (field.zero,) * n


def unit_vector(i: int, n: int, field: Field = QQ) -> Vector:
    z, o = field.zero, field.one
    return tuple(o if k == i else z for k in range(n))


def vec_add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vectors of length {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vectors of length {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def lin_comb(coeffs: Sequence, vectors: Sequence[Sequence], n: int, field: Field = QQ) -> Vector:
    acc = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                acc[k] = acc[k] + c * a
    return tuple(acc)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def as_vector(values: Sequence, field: Field = QQ) -> Vector:
    return tuple(field(x) for x in values)


# -- row reduction -----------------------------------------------------------


def _rref_rows(rows: list[list], ncols: int, one) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        piv = prow[c]
        if piv != one:
            inv = one / piv
            prow = [x * inv if x else x for x in prow]
            rows[r] = prow
        support = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            ri = rows[i]
            f = ri[c]
            if f:
                for j in support:
                    ri[j] = ri[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def _independent_rows(rows: Sequence[Sequence], ncols: int, one) -> list[list]:
    """Rows spanning the same space, at most ``ncols`` of them.

    Each row is reduced against the pivots found so far, so a tall system
    costs about ``nrows * rank`` row operations instead of a full sweep.
    """
    kept: list[list] = []
    pivot_of: list[int] = []
    for r in rows:
        v = list(r)
        for p, kr in zip(pivot_of, kept):
            f = v[p]
            if f:
                for j in range(p, ncols):
                    if kr[j]:
                        v[j] = v[j] - f * kr[j]
        lead = next((j for j in range(ncols) if v[j]), None)
        if lead is None:
            continue
        inv = one / v[lead]
        kept.append([x * inv if x else x for x in v])
        pivot_of.append(lead)
        if len(kept) == ncols:
            break
    return kept


def _primitive(v: list[int]) -> list[int]:
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                return v
    return [x // g for x in v] if g > 1 else v


def _independent_rows_qq(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Integer (fraction-free) version of :func:`_independent_rows` over Q."""
    kept: list[list[int]] = []
    pivot_of: list[int] = []
    for r in rows:
        den = 1
        for x in r:
            if x and x.denominator != 1:
                den = den * x.denominator // gcd(den, x.denominator)
        v = [x.numerator * (den // x.denominator) if x else 0 for x in r]
        for p, kr in zip(pivot_of, kept):
            b = v[p]
            if b:
                a = kr[p]
                g = gcd(a, b)
                a, b = a // g, b // g
                v = [a * x - b * y for x, y in zip(v, kr)]
                v = _primitive(v)
        lead = next((j for j in range(ncols) if v[j]), None)
        if lead is None:
            continue
        kept.append(_primitive(v))
        pivot_of.append(lead)
        if len(kept) == ncols:
            break
    return [[Fraction(x) for x in v] for v in kept]


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Reduced row echelon form, pivot columns and rank of ``m``."""
    one = m.field.one
    if m.nrows > m.ncols:
        # the rref depends only on the row space
        if m.field == QQ:
            rows = _independent_rows_qq(m.rows, m.ncols)
        else:
            rows = _independent_rows(m.rows, m.ncols, one)
    else:
        rows = [list(r) for r in m.rows]
    red, pivots = _rref_rows(rows, m.ncols, one)
    zero_row = (m.field.zero,) * m.ncols
    out = tuple(tuple(r) for r in red) + (zero_row,) * (m.nrows - len(red))
    return Matrix._raw(out, m.ncols, m.field), tuple(pivots), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of ``{v : m v = 0}``, one vector per free column."""
    red, pivots, _ = rref(m)
    n = m.ncols
    field = m.field
    zero, one = field.zero, field.one
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [zero] * n
        v[f] = one
        for r, c in enumerate(pivots):
            x = red.rows[r][f]
            if x:
                v[c] = -x
        basis.append(tuple(v))
    return basis


def _field_of_vectors(vectors: Sequence[Sequence], default: Field = QQ) -> Field:
    return common_field((x for v in vectors for x in v), default=default)


def span_basis(vectors: Sequence[Sequence], n: int | None = None, field: Field | None = None) -> list[Vector]:
    """Canonical basis (nonzero rref rows) of the span of ``vectors``."""
    vectors = [tuple(v) for v in vectors]
    if n is None:
        if not vectors:
            return []
        n = len(vectors[0])
    if not vectors:
        return []
    if field is None:
        field = _field_of_vectors(vectors)
    red, _, rk = rref(Matrix(vectors, ncols=n, field=field))
    return list(red.rows[:rk])


def same_span(u: Sequence[Sequence], w: Sequence[Sequence], n: int, field: Field | None = None) -> bool:
    return span_basis(u, n, field) == span_basis(w, n, field)


def subspace_membership(basis: Sequence[Sequence], v: Sequence) -> Vector | None:
    """Coordinates of ``v`` in ``basis`` or ``None`` if ``v`` is outside the span.

    ``basis`` is assumed linearly independent; the returned coordinates then
    reconstruct ``v`` exactly and are unique.
    """
    v = tuple(v)
    n = len(v)
    for b in basis:
        if len(b) != n:
            raise DimensionMismatchError(f"basis vector of length {len(b)}, expected {n}")
    field = _field_of_vectors(list(basis) + [v])
    k = len(basis)
    if k == 0:
        return () if not any(v) else None
    rows = [[field(b[i]) for b in basis] + [field(v[i])] for i in range(n)]
    red, pivots = _rref_rows(rows, k + 1, field.one)
    if pivots and pivots[-1] == k:
        return None
    coords = [field.zero] * k
    for r, c in enumerate(pivots):
        coords[c] = red[r][k]
    return tuple(coords)


class Echelon:
    """Incrementally grown echelon basis supporting fast membership tests."""

    def __init__(self, n: int, field: Field = QQ):
        self.n = n
        self.field = field
        self._rows: list[list] = []
        self._pivots: list[int] = []

    def __len__(self):
        return len(self._rows)

    def reduce(self, v: Sequence) -> list:
        w = list(v)
        for row, c in zip(self._rows, self._pivots):
            f = w[c]
            if f:
                for j in range(c, self.n):
                    if row[j]:
                        w[j] = w[j] - f * row[j]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Add ``v``; return ``True`` when it enlarged the span."""
        w = self.reduce(v)
        for c, x in enumerate(w):
            if x:
                inv = self.field.one / x
                self._rows.append([y * inv for y in w])
                self._pivots.append(c)
                return True
        return False

    def basis(self) -> list[Vector]:
        return span_basis([tuple(r) for r in self._rows], self.n, self.field)


def complement_in_span(big: Sequence[Sequence], sub: Sequence[Sequence]) -> list[Vector]:
    """Members of ``big`` extending ``sub`` to a basis of ``span(big)``.

    The choice is greedy in the order of ``big``, hence deterministic.
    """
    big = [tuple(v) for v in big]
    sub = [tuple(v) for v in sub]
    if not big:
        if any(any(v) for v in sub):
            raise NotInSpanError("sub is not contained in span(big)")
        return []
    n = len(big[0])
    field = _field_of_vectors(big + sub)
    outer = Echelon(n, field)
    for v in big:
        outer.add(v)
    for v in sub:
        if len(v) != n:
            raise DimensionMismatchError("vector length mismatch")
        if not outer.contains(v):
            raise NotInSpanError("sub is not contained in span(big)")
    ech = Echelon(n, field)
    for v in sub:
        ech.add(v)
    result = []
    for v in big:
        if ech.add(v):
            result.append(v)
    return result


def intersect_subspaces(u: Sequence[Sequence], w: Sequence[Sequence], n: int, field: Field | None = None) -> list[Vector]:
    """Canonical basis of ``span(u) ∩ span(w)``."""
    u = span_basis(u, n, field)
    w = span_basis(w, n, field)
    if not u or not w:
        return []
    if field is None:
        field = _field_of_vectors(u + w)
    cols = list(u) + [tuple(-x for x in v) for v in w]
    m = Matrix.from_columns(cols, nrows=n, field=field)
    ker = kernel_basis(m)
    vecs = [lin_comb(k[: len(u)], u, n, field) for k in ker]
    return span_basis(vecs, n, field)


def rational_reconstruction(residue: int, modulus: int, bound: int) -> Fraction | None:
    """The fraction ``p/q`` with ``|p|, q <= bound`` and ``p ≡ q·residue``.

    Uses the half-extended Euclidean algorithm; the answer is unique when
    ``2·bound² < modulus``.  Returns ``None`` when no such fraction exists.
    """
    residue %= modulus
    r0, r1 = modulus, residue
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    if gcd(t1, modulus) != 1:
        return None
    if t1 < 0:
        r1, t1 = -r1, -t1
    return Fraction(r1, t1)
