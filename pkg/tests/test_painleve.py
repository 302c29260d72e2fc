from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobverify.exact import RatFunW, W_TABLE, parse_poly
from frobverify.frobenius import continue_w
from frobverify.numeric import scalar_derivative, solve_w, t_of_w
from frobverify.painleve import (
    HEADER,
    CandidateFormatError,
    CandidateSolution,
    CriticalPointError,
    SingularConfigurationError,
    dt_dw_ratfun,
    implicit_dw_dt,
    pvi_coefficients,
    pvi_residual,
    pvi_rhs,
)

SEED = 0x5EED


def ratfun(num: str, den: str = "1") -> RatFunW:
    return RatFunW(parse_poly(num, W_TABLE), parse_poly(den, W_TABLE))


def seeded_candidates(count=3, seed=SEED):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        num = [Fraction(int(c), int(d)) for c, d in zip(rng.integers(-9, 10, 4), rng.integers(1, 6, 4))]
        den = [Fraction(int(c)) for c in rng.integers(-9, 10, 2)] + [Fraction(1)]
        out.append(RatFunW.from_coeffs(num, den))
    return out


def seeded_ws(count=8, seed=SEED):
    rng = np.random.default_rng(seed + 1)
    ws = []
    while len(ws) < count:
        w = complex(rng.uniform(-4, 4), rng.uniform(-2, 2))
        if min(abs(w - p) for p in (0, 1, -1, 3, -3)) > 0.5:
            ws.append(w)
    return ws


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("sign", ["plus", "minus"])
def test_coefficient_table(n, sign):
    c = pvi_coefficients(n, sign)
    half = Fraction(2 * n + 1, 2)
    s = 1 if sign == "plus" else -1
    assert c.alpha == (half - s) ** 2 / 2
    assert c.beta == -(half**2) / 2
    assert c.gamma == half**2 / 2
    assert c.delta == Fraction(1, 2) - half**2 / 2


def test_coefficient_spot_values():
    assert pvi_coefficients(0, "+").as_tuple() == (Fraction(1, 8), Fraction(-1, 8), Fraction(1, 8), Fraction(3, 8))
    assert pvi_coefficients(0, "-").alpha == Fraction(9, 8)
    assert pvi_coefficients(1, 1).alpha == Fraction(1, 8)
    with pytest.raises(ValueError):
        pvi_coefficients(-1, "+")
    with pytest.raises(ValueError):
        pvi_coefficients(0, 0)


@given(st.integers(0, 200), st.sampled_from([1, -1]))
def test_coefficient_identities(n, sign):
    c = pvi_coefficients(n, sign)
    assert c.beta + c.gamma == 0
    assert c.delta - Fraction(1, 2) + c.gamma == 0


def test_dw_dt():
    assert dt_dw_ratfun() == ratfun("16*w^2*(w - 3)^2", "(w - 1)^2*(w + 3)^4")
    assert implicit_dw_dt(Fraction(2)) == Fraction(625, 64)
    with pytest.raises(CriticalPointError):
        implicit_dw_dt(0)
    with pytest.raises(CriticalPointError):
        pvi_residual(ratfun("w"), pvi_coefficients(0, "+"), 3)


def test_constant_candidate_residual():
    coeffs = pvi_coefficients(0, "+")
    w = 2.3 + 0.4j
    ev = pvi_residual(ratfun("2"), coeffs, w)
    assert ev.lam_t == 0 and ev.lam_tt == 0
    t = t_of_w(w)
    a, b, g, d = (float(v) for v in coeffs.as_tuple())
    bracket = a + b * t / 4 + g * (t - 1) + d * t * (t - 1) / (2 - t) ** 2
    expected = -2 * (2 - t) / (t**2 * (t - 1) ** 2) * bracket
    assert abs(ev.residual - expected) < 1e-8 * abs(expected)
    # the same right side by differencing the right side in lambda_t around 0
    fd = scalar_derivative(lambda v: pvi_rhs(2, v, t, coeffs), 0)
    assert abs(fd + (1 / t + 1 / (t - 1) + 1 / (2 - t))) < 1e-8


@pytest.mark.parametrize("lam", seeded_candidates())
def test_chain_rule_against_finite_differences(lam):
    cand = CandidateSolution(lam)
    d0, d1, d2 = cand.derivatives
    for w in seeded_ws():
        t = t_of_w(w)
        along_t = lambda s: complex(d0(continue_w(s, w)))
        fd1 = scalar_derivative(along_t, t, h=1e-4 * min(abs(t), abs(t - 1)))
        assert abs(fd1 - complex(d1(w))) <= 1e-7 * max(1.0, abs(fd1))
        fd2 = scalar_derivative(lambda s: complex(d1(continue_w(s, w))), t, h=1e-4 * min(abs(t), abs(t - 1)))
        assert abs(fd2 - complex(d2(w))) <= 1e-7 * max(1.0, abs(fd2))


def test_reparametrization_consistency():
    coeffs = pvi_coefficients(1, "-")
    lam = seeded_candidates(1)[0]
    for w in seeded_ws():
        t = t_of_w(w)
        # recover the same germ from t alone, starting off the branch point
        w2 = solve_w(t, w + 0.05)
        a = pvi_residual(lam, coeffs, w)
        b = pvi_residual(lam, coeffs, w2)
        assert abs(a.residual - b.residual) <= 1e-9 * max(1.0, abs(a.residual))
        assert abs(a.t - b.t) < 1e-12 * max(1, abs(t))


def test_singular_configurations():
    coeffs = pvi_coefficients(0, "+")
    for lam in ("0", "1"):
        with pytest.raises(SingularConfigurationError):
            pvi_residual(ratfun(lam), coeffs, 2)
    with pytest.raises(SingularConfigurationError):
        pvi_residual(ratfun("1", "w - 5"), coeffs, 5)
    with pytest.raises(SingularConfigurationError):
        pvi_rhs(0.5, 0, 0.5, coeffs)
    with pytest.raises(SingularConfigurationError):
        pvi_rhs(0.5, 0, 1, coeffs)


def test_candidate_file_round_trip(tmp_path):
    cand = CandidateSolution(ratfun("w^3 - 2/3*w + 1", "w^2 + 7"))
    path = tmp_path / "cand.poly"
    path.write_text(cand.to_text())
    assert CandidateSolution.load(path).lam == cand.lam
    assert cand.to_text().startswith(HEADER)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "not a header\n1 0\n\n1 0\n",
        f"{HEADER}\n1 0\n",
        f"{HEADER}\n1 0\n\n1 0\n\n1 0\n",
        f"{HEADER}\n1 0\n\n0 0\n",
    ],
)
def test_candidate_format_errors(text):
    with pytest.raises(ValueError):
        CandidateSolution.from_text(text)


def test_candidate_errors_are_format_errors():
    with pytest.raises(CandidateFormatError):
        CandidateSolution.from_text("lambda-candidate v2\n1 0\n")
