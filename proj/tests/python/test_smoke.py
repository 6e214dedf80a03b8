"""Smoke tests for the compiled python module."""

import _symcover as sc


def test_catalog_roundtrip():
    ids = sc.catalog_complex_ids()
    assert "lutz_m10_247880" in ids
    k = sc.catalog_complex("lutz_m10_247880")
    assert k.m == 10
    assert len(k.facets) == 24
    text = sc.serialize_complex(k)
    again = sc.parse_complex(text)
    assert again.facets == k.facets


def test_characteristic_and_betti():
    k = sc.catalog_complex("lutz_m10_247880")
    lam = sc.catalog_matrix("lambda-A.2")
    assert lam.column_codes == [1, 2, 4, 8, 14, 14, 4, 2, 8, 1]
    assert sc.is_characteristic(k, lam)
    assert sc.is_orientable(k, lam)
    assert sc.manifold_betti(k, lam)[2] == 2
    assert sc.rz_b1(k) == 32


def test_counts_match_the_formula():
    for m1, m2 in [(4, 4), (4, 6)]:
        k = sc.catalog_complex(f"polygon-product-{m1}-{m2}")
        count, _ = sc.enumerate_char_maps(k, filter="symplectic", count_only=True)
        assert count == sc.count_formula_symplectic(m1, m2)


def test_census():
    k = sc.catalog_complex("lutz_m10_247880")
    count, matrices = sc.enumerate_char_maps(k, filter="csymplectic")
    assert count == 100
    assert len(matrices) == 100


def test_verdicts():
    k = sc.catalog_complex("polygon-product-5-4")
    lam = sc.catalog_matrix("example-5.5")
    verdict = sc.symplectic_verdict(k, lam)
    assert verdict["verdict"] == "NotSymplectic"

    ixq = sc.catalog_complex("IxQ-fig1")
    product = sc.catalog_matrix("lambda-IxQ")
    assert sc.symplectic_verdict(ixq, product)["verdict"] == "Symplectic"


def test_fibering():
    l_complex = sc.catalog_complex("L-fig1")
    mu = sc.catalog_matrix("mu-sec6")
    eps = [0, 1, 0, 0, 0, 0, 1, 0, 0, 0]
    cert = sc.fibering_verdict(l_complex, mu, eps)
    assert cert["fibers"]
    assert cert["divisor"] == 2
    assert cert["links"][0]["N"] == [1, 6]


def test_squaring_rank():
    k = sc.catalog_complex("polygon-product-4-6")
    lam = sc.normal_form_lambda_beta(4, 6, [1, 0, 0, 0])
    h1, h2, rank = sc.squaring_rank(k, lam)
    assert (h1, h2, rank) == (6, 10, 4)
