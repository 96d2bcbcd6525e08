import random
from fractions import Fraction as F

import pytest

from nilex import (
    GF,
    Algebra,
    BadPrimeError,
    IsomorphismFailure,
    Matrix,
    base_change,
    catalog_get,
    certify_noniso,
    fingerprint,
    instances,
    iso_by_generator_image,
    iso_search_fp,
    iso_search_rational,
    names,
    reduce_mod_p,
    verify_witness,
)

from conftest import structured_change


def test_fingerprint_examples():
    assert fingerprint(catalog_get("A5_06")).powers == (5, 4, 3, 2, 1, 0)
    z = fingerprint(Algebra.zero(4))
    assert z.ann == 4 and z.square == z.sym_rank == z.antisym_rank == 0
    assert fingerprint(catalog_get("A4_02")).cohomology[2] == 1


def test_generator_image_examples():
    a = catalog_get("A5_06")
    w = iso_by_generator_image(a, a, a.e(1))
    assert w.matrix == Matrix.identity(5)
    b = catalog_get("A2_01")
    assert iso_by_generator_image(b, b, [2, 0]).matrix == Matrix.diagonal([2, 4])


def test_a4_02_and_a4_03_have_no_f5_witness():
    a, b = (reduce_mod_p(catalog_get(n), 5) for n in ("A4_02", "A4_03"))
    fp = GF(5)
    found = 0
    for k in range(1, 5**4):
        img = [fp((k // 5**i) % 5) for i in range(4)]
        try:
            iso_by_generator_image(a, b, img)
            found += 1
        except IsomorphismFailure:
            pass
    assert found == 0
    res = iso_search_fp(catalog_get("A4_02"), catalog_get("A4_03"), 5)
    assert not res.found and res.exhaustive


def test_fp_search_examples():
    a = catalog_get("A5_06")
    assert iso_search_fp(a, a, 5).found
    b8 = catalog_get("A6_08", {"beta": F(3, 2)}, strict=False)
    b9 = catalog_get("A6_09", {"beta": F(3, 2)}, strict=False)
    assert iso_search_fp(b8, b9, 5).found
    res = iso_search_fp(a, catalog_get("A5_07"), 5)
    assert not res.found and res.exhaustive


@pytest.mark.parametrize("p", [2, 3])
def test_small_characteristic_rejected(p):
    a = catalog_get("A4_01")
    with pytest.raises(BadPrimeError):
        iso_search_fp(a, a, p)


def test_planted_base_change_is_found():
    rng = random.Random(5)
    for name in ("A5_03", "A5_06", "A6_16"):
        a = catalog_get(name)
        b = base_change(a, structured_change(rng, a.dim))
        assert iso_search_fp(a, b, 7).found
        r = iso_search_rational(a, b)
        assert r.found
        verify_witness(a, b, r.witness.matrix)
        # a rational witness reduces to a GF(p) one
        m = r.witness.matrix
        if all(x.denominator % 5 for row in m.rows for x in row):
            m5 = Matrix([[GF(5)(x) for x in row] for row in m.rows], a.dim, GF(5))
            verify_witness(reduce_mod_p(a, 5), reduce_mod_p(b, 5), m5)


def test_corrupted_witness_rejected():
    a = catalog_get("A5_06")
    b = base_change(a, structured_change(random.Random(2), 5))
    m = iso_search_rational(a, b).witness.matrix
    rows = [list(r) for r in m.rows]
    rows[4][0] += 1
    rows[4][4] += 1
    with pytest.raises(IsomorphismFailure):
        verify_witness(a, b, Matrix(rows))
    with pytest.raises(IsomorphismFailure):
        verify_witness(a, b, Matrix.zeros(5, 5))


def test_fingerprint_invariant_under_base_change():
    rng = random.Random(50)
    for a in instances(count=1):
        fa = fingerprint(a)
        for _ in range(50):
            assert fingerprint(base_change(a, structured_change(rng, a.dim))) == fa, a.name


def test_a4_04_parameters_not_isomorphic():
    a, b = catalog_get("A4_04", {"alpha": 0}), catalog_get("A4_04", {"alpha": 2})
    r = iso_search_rational(a, b, height_bound=3)
    assert not r.found
    assert all(x.exhaustive and not x.found for x in r.fp_results)
    assert [x.p for x in r.fp_results] == [5, 7]


def test_certificates():
    a506, a507 = catalog_get("A5_06"), catalog_get("A5_07")
    assert certify_noniso(catalog_get("A5_01"), a506).kind == "fingerprint"
    cert = certify_noniso(a506, a507, use_fingerprint=False)
    assert cert.kind == "finite-field" and cert.details["primes"] == [5, 7]
    assert certify_noniso(a506, catalog_get("A4_01")).kind == "dimension"
    assert not certify_noniso(a506, a506).separated


def test_distinct_dim5_names_have_distinct_representatives():
    algs = [catalog_get(n) for n in names(5) if n not in ("A5_02", "A5_04", "A5_05")]
    for i, a in enumerate(algs):
        for b in algs[i + 1 :]:
            assert certify_noniso(a, b).separated, (a.name, b.name)
