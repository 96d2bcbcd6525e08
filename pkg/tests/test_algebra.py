from fractions import Fraction as F

import pytest

from nilex import (
    GF,
    QQ,
    Algebra,
    BadPrimeError,
    Matrix,
    NotCentralError,
    annihilator,
    associator,
    base_change,
    catalog_get,
    check_assosymmetric,
    generated_subalgebra,
    instances,
    is_homomorphism,
    is_one_generated,
    multiply,
    power_sequence,
    quotient_by_central_subspace,
    reduce_mod_p,
)
from nilex.classification import aut_forms
from nilex.linalg import Echelon, vec_add

from conftest import random_rational, structured_change

# fails the identities at (e1, e1, e2)
D = Algebra.from_products(3, {(1, 1): {2: 1}, (1, 2): {3: 1}, (2, 2): {3: 1}})


def vec(*xs):
    return tuple(F(x) for x in xs)


def test_multiply_examples():
    a = catalog_get("A4_01")
    assert multiply(a, a.e(1), a.e(2)) == a.e(4)
    assert multiply(a, a.e(3), a.e(4)) == a.zero_vector()
    assert multiply(a, vec_add(a.e(1), a.e(2)), a.e(1)) == vec(0, 1, 1, 0)


def test_associator_examples():
    a = catalog_get("A4_04", {"alpha": 1})
    assert associator(a, a.zero_vector(), a.e(2), a.e(3)) == a.zero_vector()
    assert associator(a, a.e(1), a.e(1), a.e(1)) == a.zero_vector()
    assert associator(D, D.e(1), D.e(1), D.e(2)) == D.e(3)


def test_check_assosymmetric():
    assert check_assosymmetric(catalog_get("A4_06"))
    assert check_assosymmetric(Algebra.zero(4))
    res = check_assosymmetric(D)
    assert not res
    assert res.location[:3] == (1, 1, 2)


def test_power_sequence_examples():
    z = power_sequence(Algebra.zero(3))
    assert z.dims == (3, 0) and z.nilpotent
    assert power_sequence(catalog_get("A5_06")).dims == (5, 4, 3, 2, 1, 0)
    idem = power_sequence(Algebra.from_products(1, {(1, 1): {1: 1}}))
    assert not idem.nilpotent and idem.index is None


def test_annihilator_examples():
    a = catalog_get("A4_01")
    assert annihilator(a) == [a.e(3), a.e(4)]
    assert len(annihilator(Algebra.zero(3))) == 3
    b = catalog_get("A5_06")
    assert annihilator(b) == [b.e(5)]


def test_generated_subalgebra_examples():
    a = catalog_get("A2_01")
    span, plan = generated_subalgebra(a, a.e(1))
    assert len(span) == 2 and plan.trees == (None, (0, 0))
    b = catalog_get("A4_01")
    span, plan = generated_subalgebra(b, b.e(2))
    assert plan is None and len(span) < 4
    span, plan = generated_subalgebra(b, b.e(4))
    assert plan is None and len(span) == 1


def test_is_one_generated_examples():
    for a in instances(dim=5) + instances(dim=6):
        res = is_one_generated(a)
        assert res.witness == a.e(1), a.name
    assert not is_one_generated(Algebra.zero(2))
    assert is_one_generated(catalog_get("A3_02", {"alpha": 5})).witness == vec(1, 0, 0)


def test_exhaustive_generator_search_needs_finite_field():
    with pytest.raises(ValueError):
        is_one_generated(Algebra.zero(2), exhaustive=True)
    res = is_one_generated(Algebra.zero(2, GF(5)), exhaustive=True)
    assert not res and res.exhaustive


def test_is_homomorphism_examples():
    a = catalog_get("A4_01")
    assert is_homomorphism(a, a, Matrix.identity(4))
    aut = next(f for f in aut_forms() if f.algebra == "A4_01")
    assert is_homomorphism(a, a, aut.matrix({"x": 2, "y": 0, "z": 0, "t": 0}))
    b = catalog_get("A2_01")
    res = is_homomorphism(b, b, Matrix.diagonal([2, 2]))
    assert not res and res.location == (1, 1)
    assert res.lhs == vec(0, 2) and res.rhs == vec(0, 4)


def test_base_change_examples():
    a = catalog_get("A4_01")
    assert base_change(a, Matrix.identity(4)).table == a.table
    b = catalog_get("A2_01")
    m = Matrix.diagonal([2, 1])
    c = base_change(b, m)
    assert c.products() == {(1, 1): {2: F(1, 4)}}
    assert is_homomorphism(b, c, m)
    perm = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert base_change(Algebra.zero(3), perm) == Algebra.zero(3)


def test_reduce_mod_p_examples():
    a = catalog_get("A4_01")
    r = reduce_mod_p(a, 5)
    assert r.field == GF(5)
    assert {k: {i: int(c) for i, c in v.items()} for k, v in r.products().items()} == {
        k: {i: int(c) for i, c in v.items()} for k, v in a.products().items()
    }
    b = catalog_get("A6_13")
    with pytest.raises(BadPrimeError):
        reduce_mod_p(b, 2)
    r5 = reduce_mod_p(b, 5)
    assert int(r5.products()[(1, 4)][5]) == 4
    assert int(r5.products()[(3, 1)][5]) == 3


def test_quotient_examples():
    a = catalog_get("A5_01")
    q = quotient_by_central_subspace(a, [a.e(4), a.e(5)])
    assert q.products() == {(1, 1): {2: 1}, (2, 1): {3: 1}}
    assert quotient_by_central_subspace(a, []).table == a.table
    z = Algebra.zero(3)
    assert quotient_by_central_subspace(z, annihilator(z)).dim == 0
    with pytest.raises(NotCentralError):
        quotient_by_central_subspace(a, [a.e(1)])


def test_identity_holds_on_random_triples(rng):
    for a in instances(dim=5, count=1) + [catalog_get("A4_06")]:
        assert check_assosymmetric(a)
        for _ in range(100 // 8):
            x, y, z = ([random_rational(rng) for _ in range(a.dim)] for _ in range(3))
            assoc = associator(a, x, y, z)
            assert assoc == associator(a, x, z, y) == associator(a, y, x, z)


def test_power_sequence_terminates():
    for a in instances(count=1, include_secondary=True):
        ps = power_sequence(a)
        assert ps.nilpotent and len(ps.dims) <= a.dim + 1


def test_annihilator_and_closure_invariants():
    for a in instances(count=1):
        for x in annihilator(a):
            for e in a.basis():
                assert not any(multiply(a, x, e)) and not any(multiply(a, e, x))
        span, _ = generated_subalgebra(a, a.e(2)) if a.dim > 1 else ([], None)
        ech = Echelon(a.dim, QQ)
        for v in span:
            ech.add(v)
        for u in span:
            for v in span:
                assert ech.contains(multiply(a, u, v))


def test_base_change_is_isomorphism(rng):
    for a in instances(dim=5, count=1):
        m = structured_change(rng, a.dim)
        assert is_homomorphism(a, base_change(a, m), m)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_reduction_commutes_with_products(p):
    fp = GF(p)
    for a in instances(count=1):
        if any(c.denominator % p == 0 for row in a.table for v in row for c in v):
            continue
        r = reduce_mod_p(a, p)
        for x in a.basis():
            for y in a.basis():
                want = tuple(fp(c) for c in multiply(a, x, y))
                assert multiply(r, [fp(c) for c in x], [fp(c) for c in y]) == want
