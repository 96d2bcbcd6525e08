import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from nilex import GF, QQ, FieldMismatchError, Matrix, catalog_get, kernel_basis, rank, rational_reconstruction, rref
from nilex.cohomology import BilinearForm, coboundary_space, cocycle_space
from nilex.fields import Mod
from nilex.linalg import complement_in_span, same_span, subspace_membership

from conftest import random_matrix


def test_rref_identity():
    r, pivots, k = rref(Matrix.identity(3))
    assert r == Matrix.identity(3)
    assert pivots == (0, 1, 2) and k == 3


def test_rref_zero():
    z = Matrix.zeros(2, 4)
    r, pivots, k = rref(z)
    assert r == z and pivots == () and k == 0


def test_rref_rank_one():
    r, _, k = rref(Matrix([[1, 2], [2, 4]]))
    assert r == Matrix([[1, 2], [0, 0]])
    assert k == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(4)) == []
    assert len(kernel_basis(Matrix.zeros(1, 3))) == 3
    (v,) = kernel_basis(Matrix([[1, 2]]))
    assert v[0] == -2 * v[1] and v[1] != 0


def test_subspace_membership_examples():
    assert subspace_membership([(F(1), F(0))], (F(3), F(0))) == (F(3),)
    assert subspace_membership([(F(1), F(0))], (F(0), F(1))) is None
    a = catalog_get("A4_01")
    b2 = [t.flatten() for t in coboundary_space(a)]
    assert subspace_membership(b2, BilinearForm.delta(1, 3, 4).flatten()) is None
    assert subspace_membership(b2, BilinearForm.delta(1, 2, 4).flatten()) is not None


def test_complement_in_span():
    out = complement_in_span([(F(1), F(0)), (F(0), F(1))], [(F(1), F(0))])
    assert len(out) == 1 and out[0][1] != 0
    big = [(F(1), F(2), F(3)), (F(0), F(1), F(1))]
    assert complement_in_span(big, big) == []


def test_complement_gives_h2_class_of_a4_02():
    a = catalog_get("A4_02")
    z2 = [t.flatten() for t in cocycle_space(a)]
    b2 = [t.flatten() for t in coboundary_space(a)]
    (rep,) = complement_in_span(z2, b2)
    d12 = BilinearForm.delta(1, 2, 4).flatten()
    # rep and D12 agree modulo B^2, up to a nonzero scalar
    assert same_span(b2 + [rep], b2 + [d12], 16)
    assert subspace_membership(b2, rep) is None


def test_rational_reconstruction_examples():
    assert rational_reconstruction(0, 101, 5) == F(0)
    assert rational_reconstruction(51, 101, 5) == F(1, 2)
    assert rational_reconstruction(37, 101, 2) is None


def test_rational_reconstruction_agrees_with_exhaustion():
    # oracle: list every fraction of height <= 2 and reduce it mod 101
    hits = {}
    for p in range(-2, 3):
        for q in (1, 2):
            x = F(p, q)
            hits.setdefault(x.numerator * pow(x.denominator, -1, 101) % 101, x)
    for r in range(101):
        assert rational_reconstruction(r, 101, 2) == hits.get(r)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        Matrix([[F(1), Mod(1, 5)]])
    with pytest.raises(FieldMismatchError):
        Matrix.identity(2, QQ) @ Matrix.identity(2, GF(5))


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(
            st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity_and_idempotence(rows):
    m = Matrix(rows, len(rows[0]), QQ)
    r, pivots, k = rref(m)
    ker = kernel_basis(m)
    assert k + len(ker) == m.ncols
    for v in ker:
        assert all(x == 0 for x in m.apply(v))
    assert rref(r)[0] == r
    assert rank(m) == k == len(pivots)


@settings(max_examples=60, deadline=None)
@given(matrices, st.data())
def test_membership_coordinates(rows, data):
    basis = [tuple(r) for r in rows]
    coords = data.draw(st.lists(st.integers(-3, 3), min_size=len(basis), max_size=len(basis)))
    v = tuple(sum((c * b[i] for c, b in zip(coords, basis)), F(0)) for i in range(len(basis[0])))
    c = subspace_membership(basis, v)
    assert c is not None
    assert tuple(sum((x * b[i] for x, b in zip(c, basis)), F(0)) for i in range(len(v))) == v


@pytest.mark.parametrize("p", [5, 7, 11])
def test_rank_commutes_with_reduction(p):
    rng = random.Random(p)
    agree = 0
    for _ in range(10):
        m = random_matrix(rng, 6, 36, density=0.3)
        mp = Matrix([[GF(p)(x) for x in row] for row in m.rows], 36, GF(p))
        if rank(mp) == rank(m):
            agree += 1
        assert rank(mp) <= rank(m)
    # reduction can only drop rank, and only at finitely many primes
    assert agree >= 8
