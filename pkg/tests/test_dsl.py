from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from nilex import (
    Algebra,
    BilinearForm,
    ParseError,
    catalog_get,
    instances,
    parse_algebra,
    parse_cocycles,
    serialize_algebra,
    serialize_cocycle,
)
from nilex.verify import MALFORMED

A2 = "algebra A2_01 dim 2\ne1*e1 = e2\n"


def test_parse_examples():
    a = parse_algebra("algebra X dim 2\ne1*e1 = e2")
    assert a.table == catalog_get("A2_01").table
    assert parse_algebra("algebra Z dim 3") == Algebra.zero(3, name="Z")
    b = parse_algebra("algebra Y dim 6\ne1*e3 = -2 e5 + 1/2 e6\n")
    assert b.products() == {(1, 3): {5: F(-2), 6: F(1, 2)}}


def test_serialize_examples():
    assert serialize_algebra(catalog_get("A2_01")) == A2
    text = serialize_algebra(catalog_get("A6_13"))
    assert "e1*e4 = 3/2 e5" in text and "e3*e1 = 1/2 e5" in text


def test_round_trip_catalog():
    for a in instances(count=3, include_secondary=True):
        b = parse_algebra(serialize_algebra(a))
        assert b.table == a.table and b.name == a.name


@pytest.mark.parametrize("label, text, pos", MALFORMED, ids=[m[0] for m in MALFORMED])
def test_malformed_inputs(label, text, pos):
    with pytest.raises(ParseError) as info:
        parse_algebra(text)
    assert (info.value.line, info.value.column) == pos


def test_comments_and_blank_lines():
    a = parse_algebra("# a comment\n\nalgebra X dim 2\n\ne1*e1 = e2  # trailing\n")
    assert a.table == catalog_get("A2_01").table


def test_cocycle_blocks():
    theta = BilinearForm.from_deltas({(1, 4): 1, (2, 3): F(-3, 2), (4, 1): 1}, 4)
    ((name, back),) = parse_cocycles(serialize_cocycle(theta, "nabla"))
    assert name == "nabla" and back == theta
    with pytest.raises(ParseError):
        parse_cocycles("cocycle t dim 2\n1 0\n")


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(1, 4), st.integers(1, 4)), st.dictionaries(st.integers(1, 4), coeff, min_size=1), max_size=6))
def test_round_trip_random_tables(products):
    a = Algebra.from_products(4, products, name="R")
    assert parse_algebra(serialize_algebra(a)) == a
