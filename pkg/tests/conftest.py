import random
from fractions import Fraction

import pytest

from nilex import QQ, Matrix


def random_rational(rng: random.Random, lo: int = -5, hi: int = 5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))


def random_matrix(rng: random.Random, nrows: int, ncols: int, density: float = 0.5) -> Matrix:
    rows = [
        [random_rational(rng) if rng.random() < density else Fraction(0) for _ in range(ncols)]
        for _ in range(nrows)
    ]
    return Matrix(rows, ncols, QQ)


def structured_change(rng: random.Random, n: int) -> Matrix:
    """Signed permutation times unit lower-triangular: invertible and cheap to conjugate by."""
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            rows[i][j] = Fraction(rng.randint(-2, 2))
        rows[i][i] = Fraction(1)
    low = Matrix(rows, n, QQ)
    signs = [[Fraction(0)] * n for _ in range(n)]
    for i, j in enumerate(perm):
        signs[i][j] = Fraction(rng.choice([-2, -1, 1, 2]))
    return Matrix(signs, n, QQ) @ low


@pytest.fixture
def rng():
    return random.Random(20240601)
