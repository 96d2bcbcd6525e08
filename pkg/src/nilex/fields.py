"""Exact scalar fields: the rationals and prime fields.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field
residues are :class:`Mod` instances that carry their prime, so arithmetic
between residues of different primes (or between a residue and a
non-integer rational) raises instead of coercing.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Integral, Rational

from .errors import BadPrimeError, FieldMismatchError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Mod:
    """A residue modulo a prime, always stored in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, Integral):
            return int(other)
        if isinstance(other, Rational):
            raise FieldMismatchError(f"GF({self.p}) vs QQ element {other}")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> Mod:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by 0 in GF({self.p})")
        return Mod(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(o, self.p) / self

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, Integral):
            return (int(other) - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Base class for the two supported scalar fields."""

    characteristic: int = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)


class RationalField(Field):
    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, Mod):
            raise FieldMismatchError(f"QQ vs GF({x.p}) element")
        if isinstance(x, str):
            return Fraction(x.strip())
        if isinstance(x, (Integral, Fraction)):
            return Fraction(x)
        if isinstance(x, Rational):
            return Fraction(x.numerator, x.denominator)
        raise TypeError(f"not an exact rational: {x!r}")

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __reduce__(self):
        return (_qq, ())


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p

    @property
    def p(self) -> int:
        return self.characteristic

    def __call__(self, x) -> Mod:
        p = self.characteristic
        if isinstance(x, Mod):
            if x.p != p:
                raise FieldMismatchError(f"GF({p}) vs GF({x.p}) element")
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Integral):
            return Mod(int(x), p)
        if isinstance(x, Rational):
            if x.denominator % p == 0:
                raise BadPrimeError(f"{x} has denominator divisible by {p}")
            return Mod(x.numerator * pow(x.denominator, -1, p), p)
        raise TypeError(f"cannot map {x!r} into GF({p})")

    def elements(self):
        return [Mod(v, self.characteristic) for v in range(self.characteristic)]

    def __repr__(self):
        return f"GF({self.characteristic})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __reduce__(self):
        return (GF, (self.characteristic,))


QQ = RationalField()


def _qq():
    return QQ


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_of(x) -> Field | None:
    """Field a scalar belongs to; ``None`` for plain integers (valid in any field)."""
    if isinstance(x, Mod):
        return GF(x.p)
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, Integral):
        return None
    if isinstance(x, Rational):
        return QQ
    raise TypeError(f"not an exact scalar: {x!r}")


def common_field(values, default: Field = QQ) -> Field:
    """The single field shared by ``values``; raises on a mix."""
    found = None
    for v in values:
        f = field_of(v)
        if f is None:
            continue
        if found is None:
            found = f
        elif f != found:
            raise FieldMismatchError(f"{found!r} vs {f!r}")
    return found if found is not None else default


def is_zero(x) -> bool:
    return not x
