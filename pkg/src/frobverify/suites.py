"""Verification suites assembled into report cases.

Exact suites check polynomial and rational-function identities with zero
tolerance. Numeric suites evaluate the differential-geometric conditions at
seeded sample points and report the worst residual over the points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import geometry as geo
from .frobenius import (
    FrobeniusTriple,
    LocalSolution,
    MetricTripleW,
    check_homogeneity_zero,
    coframe_from_solution,
    companion_coframe,
    continued_exact_solution,
    exact_solution,
    fitted_deviation,
    integrate_structural,
    lift_path,
    lift_to_homogeneity,
    sample_points,
    select_sign_triple,
    solution_connection,
    structural_residual,
)
from .instanton import dataset, g_plus_minus
from .instanton.checks import (
    companion_suite,
    dataset_suite,
    homogeneity_suite,
    pullback_suite,
    s3_equivariance_suite,
    scaffold_suite,
)
from .numeric import PathSpec
from .report import ERROR, FAIL, PASS, CheckResult, exact_check, numeric_check
from .frobenius.lift import SEED

NONFLAT_THRESHOLD = 1e-2


@dataclass(frozen=True)
class Tolerances:
    tol: float = 1e-6
    warn: float = 1e-4
    h: float = geo.DEFAULT_H
    nested_h: float = geo.NESTED_H
    ode_tol: float = 1e-10


def exact_suite(ns) -> list[CheckResult]:
    ns = tuple(ns)
    out = scaffold_suite() + s3_equivariance_suite(ns) + homogeneity_suite(ns)
    for n in ns:
        out += dataset_suite(n)
        res = check_homogeneity_zero(MetricTripleW.from_dataset(n))
        if res.passed and res.c == 1:
            out.append(exact_check(f"n{n}.homogeneity_zero", True, f"c = {res.c}"))
        elif res.witness is not None:
            out.append(exact_check(f"n{n}.homogeneity_zero", res.witness))
        else:
            out.append(exact_check(f"n{n}.homogeneity_zero", False, res.detail or f"c = {res.c}"))
        recorded = dataset(n).sign_triple
        chosen, _ = select_sign_triple(n, 2)
        out.append(exact_check(f"n{n}.sign_triple", tuple(recorded) == tuple(chosen), f"signs {chosen}"))
        if n in (0, 1):
            out += pullback_suite(n)
    if 0 in ns:
        out += companion_suite()
    return out


def _ladder(check_id, values, tols: Tolerances, detail="") -> CheckResult:
    worst = float(np.max(values)) if len(values) else 0.0
    return numeric_check(check_id, worst, tols.tol, tols.warn, detail)


def _metric_suite(prefix: str, coframe, conn, m: int, points, tols: Tolerances) -> list[CheckResult]:
    torsion, curvature, riemann, conds, egoroff, agree, nabla_e = [], [], [], {}, [], [], []
    killing, conformal = [], []
    for x in points:
        torsion.append(np.abs(geo.torsion_residual(coframe, conn, x, tols.h)).max())
        curvature.append(np.abs(geo.curvature_form(conn, x, tols.h)).max())
        riemann.append(geo.riemann_tensor(coframe.metric, x, tols.nested_h))
        for key, val in geo.check_conditions(coframe, conn, m, x, tols.h).items():
            conds.setdefault(key, []).append(val)
        forms = geo.egoroff_reformulations(coframe, conn, x, tols.h)
        egoroff.append(max(forms.values()))
        agree.append(len({v < tols.tol for v in forms.values()}) == 1)
        nabla_e.append(geo.covariant_endomorphism_check(coframe, conn, geo.euler_field, x, tols.nested_h))
        g = np.diag(coframe.metric(x))
        killing.append(np.abs(geo.lie_derivative_metric(geo.identity_field, coframe.metric, x, tols.h)).max())
        le = geo.lie_derivative_metric(geo.euler_field, coframe.metric, x, tols.h)
        conformal.append(np.abs(le - (m + 2) * g).max() / np.abs(g).max())
    out = [
        _ladder(f"{prefix}.torsion", torsion, tols),
        _ladder(f"{prefix}.curvature", curvature, tols),
        _ladder(f"{prefix}.riemann", riemann, tols),
        _ladder(f"{prefix}.killing_I", killing, tols),
        _ladder(f"{prefix}.conformal_E", conformal, tols, f"weight {m + 2}"),
        _ladder(f"{prefix}.nabla_E", nabla_e, tols),
    ]
    out += [_ladder(f"{prefix}.{key}", vals, tols, f"m = {m}") for key, vals in conds.items()]
    egoroff_case = _ladder(f"{prefix}.egoroff_forms", egoroff, tols)
    if not all(agree):
        egoroff_case = CheckResult(egoroff_case.id, "numeric", FAIL, egoroff_case.residual, tols.tol, "C1a/C1b/C1c disagree")
    out.append(egoroff_case)
    return out


def _structural_suite(n: int, tols: Tolerances) -> list[CheckResult]:
    signs = dataset(n).sign_triple
    F, dF = exact_solution(n, 2, signs)
    out = [_ladder(f"n{n}.structural.exact_solution", [np.abs(structural_residual(F, dF)).max()], tols)]
    loop = PathSpec(np.concatenate([[F.t], PathSpec.loop(F.t, 0.01).waypoints, [F.t]]))
    tr = integrate_structural(F, loop, tols.ode_tol)
    out.append(_ladder(f"n{n}.structural.loop", [np.abs(tr.final - np.array(F.f)).max()], tols))
    out.append(_ladder(f"n{n}.structural.trace_drift", [tr.drift.max()], tols))
    if n == 0:
        path = PathSpec([F.t, -0.05])
        tr = integrate_structural(F, path, tols.ode_tol)
        exact = continued_exact_solution(0, path, 2, signs)
        out.append(_ladder("n0.structural.endpoint", [np.abs(tr.final - exact).max()], tols, "t: -3/125 -> -0.05"))
    return out


def _nonflat_control(x, tols: Tolerances) -> CheckResult:
    value = geo.riemann_tensor(lambda y: np.array([1, 1, y[0] ** 2 + 1]), x, tols.nested_h)
    status = PASS if value > NONFLAT_THRESHOLD else FAIL
    return CheckResult("control.riemann_nonflat", "numeric", status, value, NONFLAT_THRESHOLD, "expects max |R| above tolerance")


def numeric_suite(ns, seed: int = SEED, tols: Tolerances = Tolerances()) -> list[CheckResult]:
    samples = sample_points(seed=seed)
    points = [x for x, _ in samples]
    out = [_nonflat_control(points[0], tols)]
    for n in ns:
        sols = [LocalSolution.at(n, x, w) for x, w in samples]
        # each point carries its own germ, so evaluate per point
        cases = None
        for sol, x in zip(sols, points):
            res = _metric_suite(f"n{n}", coframe_from_solution(sol, 1), solution_connection(sol), 0, [x], tols)
            cases = res if cases is None else [_merge(a, b) for a, b in zip(cases, res)]
        out += cases
        out += _structural_suite(n, tols)
    if 0 in ns:
        out += _companion_numeric(samples, tols)
    return out


def _merge(a: CheckResult, b: CheckResult) -> CheckResult:
    """Keep the worse of two results for the same case id."""
    order = {"pass": 0, "warn": 1, "fail": 2, "error": 3}
    if order[b.status] > order[a.status]:
        return b
    if order[b.status] == order[a.status] and (b.residual or 0) > (a.residual or 0):
        return b
    return a


def _companion_numeric(samples, tols: Tolerances) -> list[CheckResult]:
    out = []
    for sign, label in ((1, "gplus"), (-1, "gminus")):
        cases = None
        lifts = []
        for x, w in samples:
            sol = LocalSolution.at(0, x, w)
            res = _metric_suite(f"n0.{label}", companion_coframe(sign, sol), solution_connection(sol), sign, [x], tols)
            cases = res if cases is None else [_merge(a, b) for a, b in zip(cases, res)]
        out += cases
        # lift along a 20-point path from the first sample
        x, w = samples[0]
        sol = LocalSolution.at(0, x, w)
        path = lift_path(x)
        lift = lift_to_homogeneity(sol, sign, path, tol=tols.ode_tol * 1e-1)
        data = g_plus_minus(sign)
        ref = np.array([data.metric(sol.w(p), p) for p in path.waypoints])
        states = lift.trajectory.states[lift.trajectory.waypoint_index]
        _, dev = fitted_deviation(states**2, ref)
        out.append(_ladder(f"n0.{label}.lift_display", [dev], tols, f"m = {sign}, 20 waypoints"))
        out.append(_ladder(f"n0.{label}.lift_C4", [lift.c4_residual.max()], tols))
    return out


def _guarded(name: str, fn, *args) -> list[CheckResult]:
    """Run a suite; an unexpected exception becomes a single error case."""
    try:
        return fn(*args)
    except Exception as exc:  # report, do not crash the whole run
        return [CheckResult(f"{name}.error", "numeric", ERROR, None, None, f"{type(exc).__name__}: {exc}")]


def run(ns, suite: str = "all", seed: int = SEED, tols: Tolerances = Tolerances()) -> list[CheckResult]:
    ns = tuple(ns)
    cases = []
    if suite in ("exact", "all"):
        cases += _guarded("exact", exact_suite, ns)
    if suite in ("numeric", "all"):
        cases += _guarded("numeric", numeric_suite, ns, seed, tols)
    return sorted(cases, key=lambda c: c.id)
