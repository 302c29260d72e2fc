"""Solutions on C^3, their coframes, and the lift to nonzero homogeneity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from ..geometry import CanonicalCoframe, EgoroffConnection, cross_matrix, egoroff_matrix
from ..numeric import PathSpec, Trajectory, integrate_path, quartic_residual, solve_w
from ..numeric.quartic import dt_dw
from ..instanton.dataset import SUPPORTED_N
from .core import numeric_metric, principal_sqrt, select_sign_triple, solution_from_w, trace

SEED = 0xF0B0
SINGULAR_W = (0, 1, -1, 3, -3)


class LiftError(ValueError):
    """The lift needs nonzero trace and a simple eigenvalue."""


def cross_ratio(x) -> complex:
    """t = (x3 - x1) / (x2 - x1)."""
    x1, x2, x3 = (complex(v) for v in x)
    return (x3 - x1) / (x2 - x1)


def continue_w(t: complex, w_ref: complex, tol: float = 1e-13, max_iter: int = 30) -> complex:
    """Root of the quartic at ``t`` continued from a nearby root ``w_ref``.

    Newton's method from ``w_ref``; falls back to the nearest root from the
    full root finder if Newton does not settle close by.
    """
    w = complex(w_ref)
    for _ in range(max_iter):
        # d/dw of (w-1)(w+3)^3 t - (w+1)(w-3)^3
        dp = t * ((w + 3) ** 3 + 3 * (w - 1) * (w + 3) ** 2) - ((w - 3) ** 3 + 3 * (w + 1) * (w - 3) ** 2)
        if dp == 0:
            break
        step = quartic_residual(w, t) / dp
        w -= step
        if abs(step) <= tol * max(1.0, abs(w)):
            if abs(w - w_ref) < 0.1 * max(1e-3, abs(w_ref)):
                return w
            break
    return solve_w(t, w_ref)


@dataclass(frozen=True)
class LocalSolution:
    """Germ of the n-instanton solution F(x) = sqrt(g(w(t(x)))) near ``x0``.

    ``w0`` is the branch value at ``x0``. Square roots are continued from the
    values at ``x0`` fixed by ``signs``; w is continued from ``w0``.
    """

    n: int
    x0: np.ndarray
    w0: complex
    signs: tuple[int, int, int]
    f0: np.ndarray

    @classmethod
    def at(cls, n: int, x0, w0: complex, signs=None) -> "LocalSolution":
        x0 = np.asarray(x0, dtype=complex)
        t0 = cross_ratio(x0)
        if abs(quartic_residual(w0, t0)) > 1e-9 * max(1.0, abs(w0) ** 4):
            raise ValueError(f"w0 = {w0} is not a branch value over t = {t0}")
        if signs is None:
            signs, _ = select_sign_triple(n, w0)
        f0 = solution_from_w(n, w0, signs=signs)
        return cls(n, x0, complex(w0), tuple(signs), f0)

    def w(self, x) -> complex:
        return continue_w(cross_ratio(x), self.w0)

    def F(self, x) -> np.ndarray:
        return solution_from_w(self.n, self.w(x), reference=self.f0)

    def __call__(self, x) -> np.ndarray:
        return self.F(x)

    @property
    def k(self) -> complex:
        return trace(self.f0)


def coframe_from_solution(F: Callable, c) -> CanonicalCoframe:
    """Coframe H = F / c of a homogeneity-0 Frobenius metric."""
    if c == 0:
        raise ValueError("c must be nonzero")
    c = complex(c) if not isinstance(c, (int, Fraction)) else float(c)
    return CanonicalCoframe(lambda x: np.asarray(F(x), dtype=complex) / c)


def solution_connection(F: Callable) -> EgoroffConnection:
    return EgoroffConnection.from_F(F)


# lift to homogeneity m = +-sqrt(8k)


def eigen_coframe(f, m) -> np.ndarray:
    """Eigenvector of v -> F x v for eigenvalue m/2, largest component set to 1."""
    K = cross_matrix(np.asarray(f, dtype=complex))
    vals, vecs = np.linalg.eig(K)
    j = int(np.argmin(np.abs(vals - m / 2)))
    others = np.delete(vals, j)
    if np.min(np.abs(others - vals[j])) < 1e-8 * max(1.0, abs(m)):
        raise LiftError("eigenvalue m/2 is not simple")
    v = vecs[:, j]
    return v / v[int(np.argmax(np.abs(v)))]


@dataclass
class LiftResult:
    m: complex
    k: complex
    H0: np.ndarray
    trajectory: Trajectory
    c4_residual: np.ndarray

    def metric_along(self) -> np.ndarray:
        return self.trajectory.states**2


def lift_to_homogeneity(F: Callable, sign: int, path: PathSpec, p0=None, tol: float = 1e-11) -> LiftResult:
    """Parallel-transport an eigen-coframe of F x along ``path`` in C^3.

    At the start of ``path`` (which must equal ``p0`` if given) H is the
    eigenvector of v -> F x v for m/2, m = sign * sqrt(8k); it is carried by
    dH = Omega x H with Omega the Egoroff connection of F.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if path.dim != 3:
        raise ValueError("lift paths live in C^3")
    start = np.asarray(path.waypoints[0], dtype=complex)
    if p0 is not None and np.abs(np.asarray(p0, dtype=complex) - start).max() > 1e-12:
        raise ValueError("p0 must be the first waypoint of the path")
    f0 = np.asarray(F(start), dtype=complex)
    k = complex(trace(f0))
    if abs(k) < 1e-14:
        raise LiftError("trace k = 0: no nonzero homogeneity to lift to")
    m = sign * principal_sqrt(8 * k)
    H0 = eigen_coframe(f0, m)

    def field(x, H):
        A = egoroff_matrix(F(x), x)
        return np.array([np.cross(A[:, i], H) for i in range(3)])

    traj = integrate_path(field, path, H0, tol=tol)
    c4 = np.array(
        [np.abs(np.cross(F(x), H) - (m / 2) * H).max() for x, H in zip(traj.points, traj.states)]
    )
    return LiftResult(m, k, H0, traj, c4)


def fitted_deviation(metrics: np.ndarray, reference: np.ndarray) -> tuple[complex, float]:
    """Fit one constant at the first row, then max relative deviation over all rows."""
    metrics = np.asarray(metrics, dtype=complex)
    reference = np.asarray(reference, dtype=complex)
    j = int(np.argmax(np.abs(reference[0])))
    lam = metrics[0, j] / reference[0, j]
    scaled = lam * reference
    dev = np.abs(metrics - scaled).max(axis=1) / np.abs(scaled).max(axis=1)
    return lam, float(dev.max())


# seeded sample points


@lru_cache(maxsize=None)
def metric_singular_w() -> tuple[complex, ...]:
    """{0, +-1, +-3} together with every zero and pole of g_ii for n = 0, 1, 2."""
    pts = [complex(v) for v in SINGULAR_W]
    for n in SUPPORTED_N:
        for g in numeric_metric(n):
            pts.extend(z for z, _ in g.zeros + g.poles)
    return tuple(pts)


def _far_from(w: complex, points: Sequence[complex], radius: float) -> bool:
    return all(abs(w - p) > radius for p in points)


def sample_points(
    count: int = 8, seed: int = SEED, margin: float = 0.5, separation: float = 0.5
) -> list[tuple[np.ndarray, complex]]:
    """Seeded (x, w) pairs with t(x) = t(w).

    w avoids the critical points of t(w) and all zeros and poles of the
    metric components (see :func:`metric_singular_w`) by ``margin``; the
    coordinates are pairwise separated by more than ``separation``; near
    coinciding coordinates the metric has cube-root behaviour in t that
    spoils nested finite differences.
    """
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        w = complex(rng.uniform(-4, 4), rng.uniform(-2, 2))
        if not _far_from(w, metric_singular_w(), margin):
            continue
        t = (w + 1) * (w - 3) ** 3 / ((w - 1) * (w + 3) ** 3)
        if abs(dt_dw(w)) < 1e-3 or not (0.05 < abs(t) < 20 and abs(t - 1) > 0.05):
            continue
        x1 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        x2 = x1 + complex(rng.uniform(0.5, 1.5), rng.uniform(-0.5, 0.5))
        x3 = x1 + t * (x2 - x1)
        x = np.array([x1, x2, x3])
        if min(abs(x[i] - x[j]) for i, j in ((0, 1), (0, 2), (1, 2))) <= separation:
            continue
        out.append((x, w))
    return out


def companion_coframe(sign: int, solution: LocalSolution) -> CanonicalCoframe:
    """Coframe of the displayed homogeneity +-1 companion of the n = 0 metric.

    H_i = sqrt(phi_i(w) (x1 - x2)^m), with the branch of each root fixed at
    the base point by the eigen-condition F x H = (m/2) H.
    """
    from ..instanton.companions import g_plus_minus

    if solution.n != 0:
        raise ValueError("companion metrics are displayed for n = 0 only")
    data = g_plus_minus(sign)
    x0 = solution.x0
    g0 = data.metric(solution.w0, x0)
    eig = eigen_coframe(solution.f0, data.m)
    roots = np.array([principal_sqrt(v) for v in g0])
    # roots are fixed up to one overall sign; align them with the eigenvector
    lam = roots / eig
    signs = np.where(np.abs(lam - lam[0]) <= np.abs(lam + lam[0]), 1, -1)
    ref0 = roots * signs

    def H(x):
        vals = data.metric(solution.w(x), x)
        roots = np.array([principal_sqrt(v) for v in vals])
        return np.where(np.abs(roots - ref0) <= np.abs(roots + ref0), roots, -roots)

    return CanonicalCoframe(H)


def lift_path(x0, count: int = 20, radius: float = 0.2) -> PathSpec:
    """Arc of ``count`` waypoints from ``x0`` moving all three coordinates."""
    x0 = np.asarray(x0, dtype=complex)
    s = np.linspace(0.0, 1.0, count)
    direction = np.array([0.3, -0.2 + 0.1j, 0.25j])
    bend = np.array([0.1j, 0.05, -0.1])
    pts = x0 + radius * (np.outer(s, direction) + np.outer(np.sin(np.pi * s), bend))
    return PathSpec(pts)
