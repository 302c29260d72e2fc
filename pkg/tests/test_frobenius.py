from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobverify.exact import RatFunW, W_TABLE, parse_poly
from frobverify.frobenius import (
    DegenerateMetricError,
    FrobeniusTriple,
    LiftError,
    LocalSolution,
    MetricTripleW,
    SingularPointError,
    check_homogeneity_zero,
    coframe_from_solution,
    continued_exact_solution,
    exact_solution,
    fitted_deviation,
    integrate_structural,
    lift_path,
    lift_to_homogeneity,
    sample_points,
    select_sign_triple,
    structural_residual,
    trace,
)
from frobverify.instanton import g_plus_minus
from frobverify.numeric import PathSpec

# frozen from tests/oracles/derive_values.py (mpmath ODE solve at 40 digits)
T_END = -0.05
F_END = np.array([0.31961487678292017, 0.15294839279895514j, 0.5733763673200857j])
T0 = -3 / 125


@pytest.mark.parametrize("n", [0, 1, 2])
def test_homogeneity_zero_passes(n):
    m = MetricTripleW.from_dataset(n)
    res = check_homogeneity_zero(m)
    assert res.passed and res.c == 1 and res.c_squared == 1
    assert res.root_sign == -1


@pytest.mark.parametrize("n", [0, 1, 2])
def test_homogeneity_zero_squared_identities(n):
    m = MetricTripleW.from_dataset(n)
    t = m.t_of_w
    g1, g2, g3 = m.g
    L1 = t * g1.diff()
    assert L1 == (1 - t) * g2.diff()
    assert L1 == t * (t - 1) * g3.diff()
    assert L1**2 == 4 * g1 * g2 * g3 * t.diff() ** 2


def test_homogeneity_zero_perturbed_fails_with_witness():
    m = MetricTripleW.from_dataset(0).scaled(0, RatFunW(parse_poly("w + 5", W_TABLE)))
    res = check_homogeneity_zero(m)
    assert not res.passed
    assert res.witness is not None and not res.witness.is_zero()


def test_homogeneity_zero_zero_component():
    m = MetricTripleW.from_dataset(0).scaled(1, RatFunW(parse_poly("0", W_TABLE)))
    with pytest.raises(DegenerateMetricError):
        check_homogeneity_zero(m)


def test_structural_residual_examples():
    F = FrobeniusTriple((0, 0, 0), 0.5)
    assert np.all(structural_residual(F, [0, 0, 0]) == 0)
    F = FrobeniusTriple((1, 1, 1), 2)
    assert np.allclose(structural_residual(F, [0, 0, 0]), [-0.5, 1, -0.5])
    with pytest.raises(ValueError):
        structural_residual(FrobeniusTriple((1, 1, 1), 0), [0, 0, 0])


@pytest.mark.parametrize("n", [0, 1, 2])
def test_exact_solution_solves_structural_equation(n):
    F, dF = exact_solution(n, 2, (1, 1, 1))
    assert np.abs(structural_residual(F, dF)).max() < 1e-12


def test_trace_values():
    assert trace(MetricTripleW.from_dataset(0)) == Fraction(1, 8)
    assert trace(MetricTripleW.from_dataset(1)) == Fraction(9, 8)
    assert trace([0, 0, 0]) == 0
    F, _ = exact_solution(0, 2, (1, 1, 1))
    assert F.k == pytest.approx(1 / 8)


def test_integrate_against_frozen_endpoint():
    F, _ = exact_solution(0, 2, (1, 1, 1))
    tr = integrate_structural(F, PathSpec([T0, T_END]), tol=1e-12)
    assert np.abs(tr.final - F_END).max() < 1e-8
    assert tr.drift.max() < 1e-9
    exact = continued_exact_solution(0, PathSpec([T0, T_END]), 2, (1, 1, 1))
    assert np.abs(exact - F_END).max() < 1e-12


@pytest.mark.parametrize("n", [0, 1, 2])
def test_loop_returns(n):
    F, _ = exact_solution(n, 2, (1, 1, 1))
    loop = PathSpec(np.concatenate([[F.t], PathSpec.loop(F.t, 0.01).waypoints, [F.t]]))
    tr = integrate_structural(F, loop)
    assert np.abs(tr.final - np.array(F.f)).max() < 1e-8


def test_integrate_rejects_bad_paths():
    F, _ = exact_solution(0, 2, (1, 1, 1))
    with pytest.raises(ValueError):
        integrate_structural(F, PathSpec([0.5, 0.6]))
    with pytest.raises(SingularPointError):
        integrate_structural(F, PathSpec([T0, 0.5]))


def test_csv_layout():
    F, _ = exact_solution(0, 2, (1, 1, 1))
    text = integrate_structural(F, PathSpec([T0, T_END])).to_csv()
    lines = text.splitlines()
    assert lines[0] == "s,t_re,t_im,f1_re,f1_im,f2_re,f2_im,f3_re,f3_im,k_re,k_im"
    assert all(len(ln.split(",")) == 11 for ln in lines)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]),
    st.complex_numbers(max_magnitude=3, allow_nan=False).filter(lambda w: min(abs(w - p) for p in (0, 1, -1, 3, -3)) > 0.3),
)
def test_even_sign_flips_preserve_solutions(flip, w):
    base, _ = select_sign_triple(0, w)
    F, dF = exact_solution(0, w, np.multiply(base, flip))
    scale = 1 + np.abs(dF).max()
    assert np.abs(structural_residual(F, dF)).max() < 1e-9 * scale
    G, _ = exact_solution(0, w, base)
    assert abs(F.k - G.k) < 1e-12


def test_coframe_scaling():
    f = lambda x: np.array([1.0, 2.0, 3.0])
    assert np.allclose(coframe_from_solution(f, 2).metric(None), [0.25, 1, 2.25])
    with pytest.raises(ValueError):
        coframe_from_solution(f, 0)


@pytest.mark.parametrize("sign", [1, -1])
def test_lift_matches_display(sign):
    x, w = sample_points(count=1)[0]
    sol = LocalSolution.at(0, x, w)
    path = lift_path(x)
    lift = lift_to_homogeneity(sol, sign, path)
    assert lift.m == pytest.approx(sign)
    ref = np.array([g_plus_minus(sign).metric(sol.w(p), p) for p in path.waypoints])
    states = lift.trajectory.at_waypoints()
    _, dev = fitted_deviation(states**2, ref)
    assert dev < 1e-6
    assert lift.c4_residual.max() < 1e-7


def test_lift_needs_nonzero_trace():
    path = PathSpec([[0, 1, 2], [0.1, 1, 2]])
    with pytest.raises(LiftError):
        lift_to_homogeneity(lambda x: np.zeros(3), 1, path)
    with pytest.raises(ValueError):
        lift_to_homogeneity(lambda x: np.ones(3), 2, path)
