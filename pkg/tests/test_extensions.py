import random
from fractions import Fraction as F

import pytest

from nilex import (
    Algebra,
    BilinearForm,
    ExtensionSpec,
    NotACocycleError,
    TrivialAnnihilatorError,
    annihilator,
    catalog_get,
    central_extension,
    check_assosymmetric,
    cohomology_basis,
    coboundary,
    is_cocycle,
    iso_search_rational,
    parse_form,
    recover_quotient,
    validate_extension,
)
from nilex.classification import extension_cases
from nilex.cohomology import complement_forms, cocycle_space
from nilex.extensions import ann_identity_holds

A404 = catalog_get("A4_04", {"alpha": 1})
N1 = parse_form("D2,1", 4)
N2 = parse_form("D1,4 + D2,3 + D3,2 + D4,1", 4)
CASES = extension_cases(1)


def test_extension_reproduces_a5_06_and_a5_07():
    assert central_extension(ExtensionSpec(A404, [N2])).table == catalog_get("A5_06").table
    a507 = central_extension(ExtensionSpec(A404, [N1 + N2]))
    assert a507.table == catalog_get("A5_07").table
    assert a507.products()[(2, 1)] == {3: 1, 5: 1}


def test_split_extension_constructible():
    ext = central_extension(ExtensionSpec(A404, [BilinearForm.zero(4)]))
    assert ext.dim == 5 and len(annihilator(ext)) == 2
    assert not validate_extension(ExtensionSpec(A404, [BilinearForm.zero(4)])).admissibility


def test_non_cocycle_rejected():
    with pytest.raises(NotACocycleError):
        central_extension(ExtensionSpec(catalog_get("A4_01"), [BilinearForm.delta(1, 3, 4)]))


def test_empty_spec_rejected():
    with pytest.raises(ValueError):
        ExtensionSpec(A404, [])


def test_validate_extension_examples():
    rep = validate_extension(ExtensionSpec(A404, [N2]))
    assert rep.ok and rep.ann_dim == 1
    a = catalog_get("A4_02")
    rep = validate_extension(ExtensionSpec(a, cohomology_basis(a).h2))
    assert rep.ann_dim == 2 and rep.flags
    split = validate_extension(ExtensionSpec(a, [coboundary(a, [F(0), F(1), F(0), F(0)])]))
    assert not split.admissibility.independent_in_h2


def test_recover_quotient_examples():
    q = recover_quotient(catalog_get("A5_06"))
    assert q.dim == 4 and iso_search_rational(q, A404, height_bound=2).found
    q = recover_quotient(catalog_get("A5_01"))
    assert q.products() == {(1, 1): {2: 1}, (2, 1): {3: 1}}
    assert recover_quotient(Algebra.zero(3)).dim == 0


def test_recover_quotient_needs_annihilator():
    one = Algebra.from_products(1, {(1, 1): {1: 1}})
    with pytest.raises(TrivialAnnihilatorError):
        recover_quotient(one)


@pytest.mark.parametrize("case", CASES, ids=[c.label for c in CASES])
def test_representatives_reproduce_tables(case):
    ext = case.build()
    assert ext.table == case.target_algebra().table
    assert ann_identity_holds(case.spec(), ext)
    assert ext.dim == case.base_algebra().dim + case.spec().s
    assert len(annihilator(ext)) >= case.spec().s


@pytest.mark.parametrize("case", [c for c in CASES if c.target_algebra().dim == 5], ids=lambda c: c.label)
def test_round_trip_dim5(case):
    assert iso_search_rational(recover_quotient(case.build()), case.base_algebra()).found


def test_a6_07_representative_is_flagged():
    case = next(c for c in CASES if c.target == "A6_07")
    rep = validate_extension(case.spec())
    assert rep.ann_dim == 2 and rep.flags and not rep.admissibility.admissible


@pytest.mark.parametrize("name, params", [("A4_01", None), ("A4_04", {"alpha": 1}), ("A5_06", None)])
def test_extension_is_assosymmetric_iff_cocycle(name, params):
    a = catalog_get(name, params)
    rng = random.Random(name)
    z2 = cocycle_space(a)
    outside = complement_forms(a)
    for k in range(50):
        theta = BilinearForm.zero(a.dim)
        for t in z2:
            theta = theta + t * F(rng.randint(-3, 3))
        if k % 2:
            theta = theta + rng.choice(outside) * F(rng.choice([-2, -1, 1, 2]))
        ext = central_extension(ExtensionSpec(a, [theta]), check=False)
        assert bool(check_assosymmetric(ext)) == bool(is_cocycle(a, theta))
        if is_cocycle(a, theta):
            assert ann_identity_holds(ExtensionSpec(a, [theta]), ext)
