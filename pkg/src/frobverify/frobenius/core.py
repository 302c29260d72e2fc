"""Diagonal metrics in w, the exact homogeneity-0 test, and the structural equation.

The structural equation for F = (f1, f2, f3) as functions of the cross-ratio t is

    df1/dt = f2 f3 / t,   df2/dt = f3 f1 / (1 - t),   df3/dt = f1 f2 / (t (t - 1)),

and it conserves the trace k = -(1/2) F . F.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from ..exact import MultiPoly, RatFunW
from ..exact.ratfun import squarefree_factors
from ..instanton.dataset import T_OF_W, dataset
from ..numeric import PathSpec, Trajectory, integrate_path, poly_roots, track_w


class DegenerateMetricError(ValueError):
    """A metric component vanishes identically."""


class SingularPointError(ValueError):
    """The structural equation is singular at t = 0 or t = 1."""


def _check_t(t) -> complex:
    t = complex(t)
    if t == 0 or t == 1:
        raise SingularPointError(f"structural equation is singular at t = {t}")
    return t


@dataclass(frozen=True)
class FrobeniusTriple:
    """Values (f1, f2, f3) of i_E Omega at the base cross-ratio ``t``."""

    f: tuple[complex, complex, complex]
    t: complex

    @property
    def k(self) -> complex:
        return trace(self.f)


@dataclass(frozen=True)
class MetricTripleW:
    g: tuple[RatFunW, RatFunW, RatFunW]
    t_of_w: RatFunW = T_OF_W
    c: Fraction = Fraction(1)
    k: Optional[Fraction] = None

    @classmethod
    def from_dataset(cls, n: int) -> "MetricTripleW":
        ds = dataset(n)
        return cls(g=ds.g_canon, t_of_w=T_OF_W, c=ds.c, k=ds.k)

    def scaled(self, i: int, factor: RatFunW) -> "MetricTripleW":
        """Copy with component ``i`` (0-based) multiplied by ``factor``."""
        g = list(self.g)
        g[i] = g[i] * factor
        return MetricTripleW(tuple(g), self.t_of_w, self.c, self.k)


# exact homogeneity-0 test


@dataclass(frozen=True)
class HomogeneityZeroResult:
    passed: bool
    c: Optional[Fraction]
    c_squared: Optional[Fraction]
    root_sign: Optional[int]
    witness: Optional[MultiPoly]
    detail: str = ""


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    def isqrt_exact(n: int) -> Optional[int]:
        r = int(n**0.5) if n < 2**52 else None
        if r is None:
            import math

            r = math.isqrt(n)
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand * cand == n:
                return cand
        return None

    if q < 0:
        return None
    a, b = isqrt_exact(q.numerator), isqrt_exact(q.denominator)
    return Fraction(a, b) if a is not None and b is not None else None


def _left_sides(m: MetricTripleW) -> tuple[RatFunW, RatFunW, RatFunW]:
    t = m.t_of_w
    g1, g2, g3 = (gi.diff() for gi in m.g)
    return (t * g1, (1 - t) * g2, t * (t - 1) * g3)


def check_homogeneity_zero(m: MetricTripleW, base_w: Fraction = Fraction(2)) -> HomogeneityZeroResult:
    """Exact test of the homogeneity-0 condition for a diagonal metric.

    With L1 = t g11', L2 = (1 - t) g22', L3 = t (t - 1) g33' (derivatives in w)
    the metric passes when L1 = L2 = L3 and L1^2 = 4 c^2 g11 g22 g33 t'^2 for a
    constant c. ``c`` is recovered as a rational number when possible;
    ``root_sign`` fixes the branch of sqrt(g11 g22 g33) at ``base_w``.
    On failure ``witness`` is a nonzero polynomial in w.
    """
    for i, gi in enumerate(m.g, 1):
        if gi.is_zero():
            raise DegenerateMetricError(f"g{i}{i} vanishes identically")
    L = _left_sides(m)
    for a, b in ((0, 1), (0, 2)):
        diff = L[a] - L[b]
        if not diff.is_zero():
            return HomogeneityZeroResult(False, None, None, None, diff.num, f"L{a + 1} != L{b + 1}")
    prod = m.g[0] * m.g[1] * m.g[2]
    tp = m.t_of_w.diff()
    c2 = L[0] ** 2 / (4 * prod * tp**2)
    if not c2.is_constant():
        return HomogeneityZeroResult(False, None, None, None, c2.diff().num, "c^2 is not constant")
    c2v = c2.num_coeffs[0] if c2.num_coeffs else Fraction(0)
    if c2v == 0:
        return HomogeneityZeroResult(False, Fraction(0), c2v, None, None, "c = 0: flat but trivial")
    c = _rational_sqrt(c2v)
    root_sign = None
    if c is not None:
        lhs = L[0](base_w)
        root = cmath.sqrt(complex(prod(base_w)))
        rhs = 2 * float(c) * root * complex(tp(base_w))
        root_sign = 1 if abs(lhs - rhs) <= abs(lhs + rhs) else -1
    return HomogeneityZeroResult(True, c, c2v, root_sign, None, f"c^2 = {c2v}")


def trace(obj) -> complex | Fraction:
    """k = -(1/2) F . F for a triple of values, or -(c^2/2) sum g_ii for a metric.

    For a MetricTripleW the result is exact and must be constant; a
    non-constant trace raises ValueError.
    """
    if isinstance(obj, MetricTripleW):
        s = obj.g[0] + obj.g[1] + obj.g[2]
        k = -(obj.c**2) * s / 2
        if not k.is_constant():
            raise ValueError("trace is not constant")
        return k.num_coeffs[0] if k.num_coeffs else Fraction(0)
    if isinstance(obj, FrobeniusTriple):
        obj = obj.f
    vals = list(obj)
    if all(isinstance(v, (int, Fraction)) for v in vals):
        return -sum(Fraction(v) ** 2 for v in vals) / 2
    return -0.5 * sum(complex(v) ** 2 for v in vals)


# the structural equation


def structural_rhs(f, t) -> np.ndarray:
    t = _check_t(t)
    f1, f2, f3 = (complex(v) for v in f)
    return np.array([f2 * f3 / t, f3 * f1 / (1 - t), f1 * f2 / (t * (t - 1))])


def structural_residual(F, dF_dt) -> np.ndarray:
    """dF/dt minus the structural right side at ``F.t``."""
    if not isinstance(F, FrobeniusTriple):
        raise TypeError("F must be a FrobeniusTriple")
    return np.asarray(dF_dt, dtype=complex) - structural_rhs(F.f, F.t)


# exact solutions f_i = s_i sqrt(g_ii(w))


def _roots_with_multiplicity(coeffs) -> list[tuple[complex, int]]:
    out = []
    for factor, mult in squarefree_factors(coeffs):
        high = [complex(c) for c in reversed(factor)]
        out.extend((complex(r), mult) for r in poly_roots(high, tol=1e-12))
    return out


class NumericRatFun:
    """Complex evaluation of a RatFunW and its derivative in product form.

    The exact squarefree decomposition makes every numeric root simple, so
    ``lead * prod (w - r)^m / prod (w - p)^m`` keeps near full relative
    precision where the expanded coefficients would cancel.
    """

    def __init__(self, r: RatFunW):
        self.exact = r
        if r.is_zero():
            self.lead, self.zeros, self.poles = 0j, [], []
            return
        self.lead = complex(r.num_coeffs[-1] / r.den_coeffs[-1])
        self.zeros = _roots_with_multiplicity(r.num_coeffs)
        self.poles = _roots_with_multiplicity(r.den_coeffs)

    def __call__(self, w):
        w = complex(w)
        val = self.lead
        for z, m in self.zeros:
            val *= (w - z) ** m
        for p, m in self.poles:
            val /= (w - p) ** m
        return val

    def deriv(self, w):
        w = complex(w)
        if any(w == z for z, _ in self.zeros):
            return complex(self.exact.diff()(w))
        log_d = sum(m / (w - z) for z, m in self.zeros) - sum(m / (w - p) for p, m in self.poles)
        return self(w) * log_d


@lru_cache(maxsize=None)
def numeric_metric(n: int) -> tuple[NumericRatFun, NumericRatFun, NumericRatFun]:
    return tuple(NumericRatFun(g) for g in dataset(n).g_canon)


_T = NumericRatFun(T_OF_W)

def principal_sqrt(z) -> complex:
    """Principal square root, insensitive to the sign of a zero imaginary part."""
    z = complex(z)
    return cmath.sqrt(complex(z.real + 0.0, z.imag + 0.0))


SIGN_PATTERNS = tuple(itertools.product((1, -1), repeat=3))


def exact_solution(n: int, w: complex, signs: Sequence[int]) -> tuple[FrobeniusTriple, np.ndarray]:
    """F = s * sqrt(g(w)) (principal roots) at t(w) and its exact t-derivative."""
    w = complex(w)
    g = numeric_metric(n)
    t = _T(w)
    dtdw = _T.deriv(w)
    if dtdw == 0:
        raise SingularPointError(f"dt/dw vanishes at w = {w}")
    f = np.array([s * principal_sqrt(gi(w)) for s, gi in zip(signs, g)])
    df = np.array([gi.deriv(w) / dtdw for gi in g]) / (2 * f)
    return FrobeniusTriple(tuple(f), t), df


def solution_from_w(n: int, w: complex, reference=None, signs=None) -> np.ndarray:
    """sqrt(g(w)) with each root chosen nearest ``reference`` (or with ``signs``)."""
    g = numeric_metric(n)
    roots = np.array([principal_sqrt(gi(complex(w))) for gi in g])
    if reference is not None:
        ref = np.asarray(reference, dtype=complex)
        return np.where(np.abs(roots - ref) <= np.abs(roots + ref), roots, -roots)
    return np.asarray(signs) * roots


def select_sign_triple(n: int, w: complex) -> tuple[tuple[int, int, int], float]:
    """Sign pattern with the smallest structural residual at ``w``.

    The eight patterns are scanned in a fixed order starting at (+, +, +);
    ties (within 1e-12 relative) keep the earlier pattern. Patterns differing
    by two sign flips are equivalent, so four of the eight always tie.
    """
    best, best_res = None, np.inf
    for signs in SIGN_PATTERNS:
        F, dF = exact_solution(n, w, signs)
        scale = max(1.0, float(np.abs(dF).max()))
        res = float(np.abs(structural_residual(F, dF)).max()) / scale
        if res < best_res - 1e-12:
            best, best_res = signs, res
    return best, best_res


# integration along t-paths


@dataclass
class StructuralTrajectory:
    trajectory: Trajectory
    k: np.ndarray

    @property
    def drift(self) -> np.ndarray:
        return np.abs(self.k - self.k[0])

    @property
    def final(self) -> np.ndarray:
        return self.trajectory.final

    def to_csv(self) -> str:
        head = ["s", "t_re", "t_im"]
        for i in (1, 2, 3):
            head += [f"f{i}_re", f"f{i}_im"]
        head += ["k_re", "k_im"]
        lines = [",".join(head)]
        tr = self.trajectory
        for s, t, f, k in zip(tr.s, tr.points, tr.states, self.k):
            vals = [s, t.real, t.imag]
            for v in f:
                vals += [v.real, v.imag]
            vals += [k.real, k.imag]
            lines.append(",".join(repr(float(v) + 0.0) for v in vals))
        return "\n".join(lines) + "\n"


def integrate_structural(F0: FrobeniusTriple, path: PathSpec, tol: float = 1e-10) -> StructuralTrajectory:
    """Integrate the structural equation along a t-path starting at ``F0.t``."""
    if path.dim != 1:
        raise ValueError("structural equation is integrated along a path in the t-plane")
    if abs(complex(path.waypoints[0]) - complex(F0.t)) > 1e-12 * max(1.0, abs(F0.t)):
        raise ValueError("path must start at the base point of F0")
    _check_path_avoids(path)
    traj = integrate_path(lambda t, f: structural_rhs(f, t), path, np.array(F0.f, dtype=complex), tol=tol)
    k = np.array([trace(f) for f in traj.states])
    return StructuralTrajectory(traj, k)


def _check_path_avoids(path: PathSpec, margin: float = 1e-9) -> None:
    pts = np.asarray(path.waypoints, dtype=complex)
    for a, b in zip(pts[:-1], pts[1:]):
        for sing in (0, 1):
            d = b - a
            s = np.clip(((sing - a) * np.conj(d)).real / abs(d) ** 2, 0, 1)
            if abs(a + s * d - sing) < margin:
                raise SingularPointError(f"path passes through t = {sing}")


def continued_exact_solution(n: int, path: PathSpec, w0: complex, signs, samples: int = 64) -> np.ndarray:
    """Exact solution at the end of ``path``, continuing w and the square roots."""
    pts = np.concatenate(
        [np.linspace(a, b, samples, endpoint=False) for a, b in zip(path.waypoints[:-1], path.waypoints[1:])]
        + [np.array([path.waypoints[-1]])]
    )
    ws = track_w(pts, w0)
    # start from w0 itself: the principal root is discontinuous on the negative axis
    f = solution_from_w(n, w0, signs=signs)
    for w in ws:
        f = solution_from_w(n, w, reference=f)
    return f
