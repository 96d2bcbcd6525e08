from fractions import Fraction as F

import pytest

from nilex import (
    ExcludedParameterError,
    UnknownAlgebraError,
    catalog_get,
    check_assosymmetric,
    instances,
    is_one_generated,
    names,
    power_sequence,
    sample_parameters,
)
from nilex.catalog import entry, locus_point, on_locus


def test_a4_04_alpha_one():
    a = catalog_get("A4_04", {"alpha": 1})
    assert a.products() == {(1, 1): {2: 1}, (1, 2): {3: 1}, (1, 3): {4: 1}, (2, 1): {3: 1}, (2, 2): {4: 1}, (3, 1): {4: 1}}
    b = catalog_get("A4_04", {"alpha": 0})
    assert b.products() == {(1, 1): {2: 1}, (1, 2): {3: 1}, (1, 3): {4: 2}, (2, 2): {4: 1}, (3, 1): {4: -1}}
    assert a.name == "A4_04(1)"


def test_excluded_beta():
    with pytest.raises(ExcludedParameterError):
        catalog_get("A6_08", {"beta": 1})
    with pytest.raises(ExcludedParameterError):
        catalog_get("A6_08", {"beta": F(3, 2)})
    assert catalog_get("A6_08", {"beta": F(3, 2)}, strict=False).dim == 6


def test_alpha_from_beta():
    a = catalog_get("A6_08", {"beta": F(11, 7)})
    assert a.name == "A6_08(11/7)"
    assert F(6, 7) in {c for v in a.products().values() for c in v.values()}


def test_unknown_name():
    with pytest.raises(UnknownAlgebraError):
        catalog_get("A7_01")


def test_sample_parameters_examples():
    assert {"beta": F(11, 7), "alpha": F(6, 7)} in sample_parameters("A6_08", 3)
    assert {"beta": F(3, 2), "alpha": F(1, 2)} in sample_parameters("A6_10", 3)
    assert [p["alpha"] for p in sample_parameters("A5_02", 3)] == [0, 1, -1]


@pytest.mark.parametrize("family", ["A6_08", "A6_09", "A6_10", "A6_11"])
def test_conic_identity(family):
    for p in sample_parameters(family, 5):
        alpha, beta = p["alpha"], p["beta"]
        assert (2 * alpha - beta) ** 2 + 3 * (beta - 1) ** 2 == 1
        assert (2 * alpha - beta) ** 2 == -2 + 6 * beta - 3 * beta**2
        assert on_locus(alpha, beta)


def test_locus_parametrization():
    beta, alpha = locus_point(F(1, 2))
    assert (beta, alpha) == (F(11, 7), F(6, 7))


@pytest.mark.parametrize("a", instances(count=3), ids=lambda a: a.name)
def test_every_instance_is_a_member(a):
    assert check_assosymmetric(a)
    assert power_sequence(a).nilpotent
    assert is_one_generated(a).witness == a.e(1)


def test_names_and_secondary_entries():
    assert names(2) == ["A2_01"]
    assert len(names(6)) == 18
    extra = set(names(include_secondary=True)) - set(names())
    assert extra == {"A3_01_printed", "A6_12_derivation", "A6_13_printed"}
    assert not check_assosymmetric(catalog_get("A6_13_printed"))
    assert catalog_get("A3_01").products() == {(1, 1): {2: 1}, (2, 1): {3: 1}}
    assert entry("A3_01").to_dict()
