import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from nilex import (
    Algebra,
    BilinearForm,
    DimensionMismatchError,
    NotACocycleError,
    catalog_get,
    check_extension_admissible,
    coboundary,
    coboundary_space,
    cocycle_annihilator,
    cocycle_space,
    cohomology_basis,
    format_form,
    instances,
    is_cocycle,
    parse_form,
)
from nilex.classification import aut_forms, seeded_values
from nilex.cohomology import aut_closure_defect, in_span
from nilex.linalg import Echelon, same_span

A401 = catalog_get("A4_01")
A404 = catalog_get("A4_04", {"alpha": 1})
NABLA2 = parse_form("D1,4 + D2,3 + D3,2 + D4,1", 4)


def test_is_cocycle_examples():
    assert is_cocycle(A401, parse_form("D1,3 + D4,1", 4))
    res = is_cocycle(A401, BilinearForm.delta(1, 3, 4))
    assert not res and res.location is not None
    rng = random.Random(3)
    theta = BilinearForm.from_vector([F(rng.randint(-3, 3)) for _ in range(9)], 3)
    assert is_cocycle(Algebra.zero(3), theta)
    with pytest.raises(DimensionMismatchError):
        is_cocycle(A401, BilinearForm.zero(3))


def test_cocycle_space_examples():
    assert len(cocycle_space(A401)) == 6
    assert len(cocycle_space(catalog_get("A5_02", {"alpha": 1}))) == 7
    assert len(cocycle_space(Algebra.zero(3))) == 9


def test_coboundary_space_examples():
    b2 = [t.flatten() for t in coboundary_space(A401)]
    want = [BilinearForm.delta(i, j, 4).flatten() for i, j in [(1, 1), (1, 2), (2, 1)]]
    assert same_span(b2, want, 16)
    assert coboundary_space(Algebra.zero(3)) == ()
    assert len(coboundary_space(catalog_get("A5_06"))) == 4


@pytest.mark.parametrize(
    "name, params, dims",
    [("A4_01", None, (6, 3, 3)), ("A4_02", None, (4, 3, 1)), ("A5_06", None, (6, 4, 2))],
)
def test_cohomology_dims(name, params, dims):
    assert cohomology_basis(catalog_get(name, params)).dims == dims


def test_h2_of_a4_02_is_delta12():
    a = catalog_get("A4_02")
    rep = cohomology_basis(a).h2
    b2 = list(coboundary_space(a))
    assert not in_span(b2, rep[0])
    assert in_span(b2 + list(rep), BilinearForm.delta(1, 2, 4))


def test_h2_of_a5_06_matches_table():
    a = catalog_get("A5_06")
    want = [BilinearForm.delta(2, 1, 5), parse_form("D1,5 + D2,4 + D3,3 + D4,2 + D5,1", 5)]
    rep = cohomology_basis(a).h2
    b2 = list(coboundary_space(a))
    for t in want:
        assert in_span(b2 + list(rep), t)


def test_cocycle_annihilator_examples():
    a = catalog_get("A4_02")
    assert len(cocycle_annihilator(a, [BilinearForm.delta(1, 1, 4)])) == 3
    assert cocycle_annihilator(A404, [NABLA2]) == []
    assert cocycle_annihilator(A404, []) == A404.basis()
    with pytest.raises(NotACocycleError):
        cocycle_annihilator(A401, [BilinearForm.delta(1, 3, 4)])


def test_admissibility_examples():
    assert check_extension_admissible(A404, [NABLA2])
    v = check_extension_admissible(A401, [BilinearForm.delta(1, 1, 4)])
    assert not v and not v.independent_in_h2
    pair = [parse_form("D2,2 + 2*D3,1 + D4,1", 4), parse_form("D1,3 + D4,1", 4)]
    assert check_extension_admissible(A401, pair)


def test_coboundaries_are_cocycles():
    rng = random.Random(11)
    for a in instances(count=1, include_secondary=False):
        for _ in range(200 // 20):
            f = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(a.dim)]
            assert is_cocycle(a, coboundary(a, f))


def test_report_invariants_over_catalog():
    for a in instances(count=1):
        rep = cohomology_basis(a)
        z, b, h = rep.dims
        assert z == b + h
        n2 = a.dim * a.dim
        ech = Echelon(n2, a.field)
        assert all(ech.add(t.flatten()) for t in rep.b2 + rep.h2)
        assert all(ech.contains(t.flatten()) for t in rep.z2)
        assert all(is_cocycle(a, t) for t in rep.z2)


def test_aut_forms_preserve_z2():
    for form in aut_forms():
        for params in form.algebra_params[:1]:
            a = catalog_get(form.algebra, params)
            for values in seeded_values(form, 2, 7):
                assert aut_closure_defect(a, form.matrix(values, params)) is None, form.label


@settings(max_examples=80, deadline=None)
@given(st.dictionaries(
    st.tuples(st.integers(1, 6), st.integers(1, 6)),
    st.fractions(min_value=-9, max_value=9, max_denominator=7).filter(bool),
    max_size=8,
))
def test_form_round_trip(terms):
    theta = BilinearForm.from_deltas(terms, 6)
    assert parse_form(format_form(theta), 6) == theta
