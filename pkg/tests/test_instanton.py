from fractions import Fraction

import importlib

import pytest

from frobverify.exact import RatFunW, W_TABLE, parse_poly
from frobverify.frobenius import select_sign_triple
from frobverify.instanton import (
    DataIntegrityError,
    PartialDataError,
    UnsupportedInstantonError,
    along_gamma,
    cross_ratio_of_w,
    dataset,
    g_plus_minus,
    gamma,
    pullback_coeff,
)
from frobverify.instanton.checks import (
    companion_suite,
    dataset_suite,
    homogeneity_suite,
    pullback_suite,
    s3_equivariance_suite,
    scaffold_suite,
)

dataset_module = importlib.import_module("frobverify.instanton.dataset")


def test_supported_n():
    assert dataset(1).l == 6
    assert dataset(2).k == Fraction(25, 8)
    with pytest.raises(UnsupportedInstantonError):
        dataset(3)


def test_term_count_and_partial_fragment():
    assert len(dataset(1).u[0]) == 84
    ds = dataset(2)
    assert ds.u_partial
    with pytest.raises(PartialDataError):
        ds.u
    assert len(ds.u_fragment) > 0


def test_gamma_points():
    assert gamma(2) == (3, -2, 6, 7)
    assert gamma(1) == (0, 0, 4, 4)
    # gamma lies on the hypersurface
    assert along_gamma(dataset(0).Q).is_zero()


def test_cross_ratio_along_gamma():
    assert cross_ratio_of_w(2) == Fraction(-3, 125)
    with pytest.raises(ZeroDivisionError):
        cross_ratio_of_w(1)
    # canonical coordinates q_i on gamma give the same cross-ratio
    ds = dataset(0)
    q1, q2, q3 = (RatFunW(along_gamma(q)) for q in ds.q)
    ratio = (q3 - q1) / (q2 - q1)
    t = RatFunW(parse_poly("(w + 1)*(w - 3)^3", W_TABLE), parse_poly("(w - 1)*(w + 3)^3", W_TABLE))
    assert ratio == t


def test_pullback_values():
    assert [pullback_coeff(0, i, 2) for i in (1, 2, 3)] == [Fraction(3, 20), Fraction(-1, 40), Fraction(-3, 8)]
    assert pullback_coeff(1, 1, 2) == Fraction(243, 980)
    # the independent oracle froze the sum of the n = 0 components at -1/4
    assert sum(g(2) for g in dataset(0).g_canon) == Fraction(-1, 4)


def test_companion_displays():
    plus, minus = g_plus_minus("+"), g_plus_minus("-")
    assert (plus.m, minus.m) == (1, -1)
    assert plus.scale == 12 and minus.scale == Fraction(1, 12)
    assert all(str(u) == "1" for u in minus.u)
    assert plus.metric(2, (0, 1, 5))[0] == pytest.approx(-12 / 625, abs=1e-15)
    with pytest.raises(ValueError):
        g_plus_minus(0)


@pytest.mark.parametrize(
    "suite",
    [
        scaffold_suite,
        s3_equivariance_suite,
        homogeneity_suite,
        companion_suite,
        lambda: dataset_suite(0) + dataset_suite(1) + dataset_suite(2),
        lambda: pullback_suite(0) + pullback_suite(1),
    ],
)
def test_exact_suites_pass(suite):
    results = suite()
    assert results
    failed = [r.id for r in results if r.status != "pass"]
    assert not failed


def test_checksum_mismatch(monkeypatch):
    real = dataset_module.manifest()
    bad = dict(real, files=dict(real["files"], **{"n0/Q.poly": "0" * 64}))
    monkeypatch.setattr(dataset_module, "manifest", lambda: bad)
    with pytest.raises(DataIntegrityError):
        dataset_module.load_polys("n0/Q.poly")
    with pytest.raises(DataIntegrityError):
        dataset_module.load_polys("n0/unlisted.poly")


@pytest.mark.parametrize("n", [0, 1, 2])
def test_manifest_sign_triples_reproduce(n):
    signs, residual = select_sign_triple(n, 2)
    assert signs == dataset(n).sign_triple
    assert residual < 1e-12
