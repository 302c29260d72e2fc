"""The quartic relation between the path parameter w and the cross-ratio t.

    (w - 1)(w + 3)^3 t - (w + 1)(w - 3)^3 = 0

Expanded, this is ``(t-1) w^4 + 8(t+1) w^3 + 18(t-1) w^2 - 27(t-1)``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .roots import poly_roots, root_residual


class BranchAmbiguityError(ValueError):
    """Two roots are (nearly) equidistant from the branch hint."""


def _check_t(t: complex) -> complex:
    t = complex(t)
    if not (np.isfinite(t.real) and np.isfinite(t.imag)):
        raise ValueError("t must be finite")
    if t == 0 or t == 1:
        raise ValueError(f"t = {t} is a singular value of the w-t relation")
    return t


def quartic_coeffs(t: complex) -> list[complex]:
    """High-to-low coefficients of the quartic in w for cross-ratio ``t``."""
    return [t - 1, 8 * (t + 1), 18 * (t - 1), 0j, -27 * (t - 1)]


def quartic_residual(w: complex, t: complex) -> complex:
    return (w - 1) * (w + 3) ** 3 * t - (w + 1) * (w - 3) ** 3


def t_of_w(w: complex) -> complex:
    """Cross-ratio as a function of w (pole at w = 1, -3)."""
    return (w + 1) * (w - 3) ** 3 / ((w - 1) * (w + 3) ** 3)


def dt_dw(w: complex) -> complex:
    return 16 * w**2 * (w - 3) ** 2 / ((w - 1) ** 2 * (w + 3) ** 4)


def w_roots(t: complex, tol: float = 1e-10) -> np.ndarray:
    t = _check_t(t)
    return poly_roots(quartic_coeffs(t), tol=tol)


def solve_w(t: complex, branch_hint: complex | None = None, tol: float = 1e-10) -> complex:
    """A root of the quartic; with ``branch_hint`` the root nearest to it.

    Raises :class:`BranchAmbiguityError` if the two nearest roots are
    equidistant from the hint to within ``tol`` (relative).
    """
    roots = w_roots(t, tol)
    if branch_hint is None:
        return complex(roots[0])
    d = np.abs(roots - complex(branch_hint))
    order = np.argsort(d)
    d1, d2 = d[order[0]], d[order[1]]
    if d2 - d1 <= tol * max(1.0, d2):
        raise BranchAmbiguityError(
            f"roots {roots[order[0]]:.6g} and {roots[order[1]]:.6g} are equidistant from hint {branch_hint}"
        )
    return complex(roots[order[0]])


def _nearest(t: complex, hint: complex, tol: float) -> tuple[complex, float]:
    """Nearest root and the ratio (nearest distance / second distance)."""
    roots = w_roots(t, tol)
    d = np.abs(roots - hint)
    order = np.argsort(d)
    ratio = d[order[0]] / d[order[1]] if d[order[1]] > 0 else 1.0
    return complex(roots[order[0]]), ratio


def track_w(
    t_points: Sequence[complex],
    w0: complex,
    tol: float = 1e-10,
    separation: float = 0.25,
    max_depth: int = 30,
) -> np.ndarray:
    """Continue a branch of w(t) along consecutive ``t_points``.

    ``w0`` must be a root at ``t_points[0]`` (it is snapped to the nearest
    root). Each segment is bisected until the continued root is clearly
    nearest to its predecessor: its distance must be below ``separation``
    times the distance to the next-nearest root. Straight segments through
    t = 0 or t = 1 are rejected.
    """
    pts = [complex(t) for t in t_points]
    if not pts:
        return np.array([], dtype=complex)
    w = solve_w(pts[0], w0, tol)
    out = [w]
    for a, b in zip(pts[:-1], pts[1:]):
        w = _track_segment(a, b, w, tol, separation, max_depth)
        out.append(w)
    return np.array(out)


def _track_segment(a, b, w, tol, separation, depth) -> complex:
    stack = [(a, b, 0)]
    cur = w
    while stack:
        ta, tb, level = stack.pop()
        _check_t(tb)
        cand, ratio = _nearest(tb, cur, tol)
        # linear predictor from the local derivative keeps steps honest
        pred = cur + (tb - ta) / dt_dw(cur) if dt_dw(cur) != 0 else cur
        cand_p, ratio_p = _nearest(tb, pred, tol)
        if ratio < separation and ratio_p < separation and cand == cand_p:
            cur = cand
            continue
        if level >= depth:
            raise BranchAmbiguityError(f"cannot resolve w branch between t = {ta} and t = {tb}")
        mid = 0.5 * (ta + tb)
        stack.append((mid, tb, level + 1))
        stack.append((ta, mid, level + 1))
    return cur


__all__ = [
    "BranchAmbiguityError",
    "dt_dw",
    "quartic_coeffs",
    "quartic_residual",
    "root_residual",
    "solve_w",
    "t_of_w",
    "track_w",
    "w_roots",
]
