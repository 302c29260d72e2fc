"""Durand-Kerner simultaneous root finding with Newton polishing."""

from __future__ import annotations

import cmath
import math
from typing import Sequence

import numpy as np

SEED_OFFSET = 0.4 + 0.9j


class RootFindingError(RuntimeError):
    """Durand-Kerner did not converge; ``best`` holds the last iterate."""

    def __init__(self, message: str, best: np.ndarray):
        super().__init__(message)
        self.best = best


def _check_finite(values) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite coefficient")
    return arr


def _horner(coeffs: np.ndarray, z):
    """Value and derivative of a high-to-low coefficient polynomial."""
    p = 0j
    dp = 0j
    for c in coeffs:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def root_residual(coeffs: Sequence[complex], root: complex) -> float:
    """Scaled residual |p(z)| / (1 + |p'(z)| |z|) for high-to-low ``coeffs``."""
    p, dp = _horner(np.asarray(coeffs, dtype=complex), root)
    return abs(p) / (1.0 + abs(dp) * abs(root))


def poly_roots(coeffs: Sequence[complex], tol: float = 1e-10, max_iter: int = 200) -> np.ndarray:
    """All roots of ``coeffs[0]*z^n + ... + coeffs[n]``.

    Initial guesses are the n-th roots of unity scaled by a root-magnitude
    bound and rotated by ``0.4+0.9i`` (deterministic). After the
    Durand-Kerner sweep has converged each root gets a few Newton steps.
    """
    a = _check_finite(coeffs)
    if a.size < 2:
        raise ValueError("polynomial must have degree >= 1")
    if a[0] == 0:
        raise ValueError("leading coefficient must be nonzero")
    a = a / a[0]
    n = a.size - 1
    if n == 1:
        return np.array([-a[1]])
    # Fujiwara-style bound on root magnitudes
    radius = 2.0 * max(abs(a[k]) ** (1.0 / k) for k in range(1, n + 1))
    radius = max(radius, 1e-3)
    z = np.array([radius * SEED_OFFSET / abs(SEED_OFFSET) * cmath.exp(2j * math.pi * k / n) for k in range(n)])

    for _ in range(max_iter):
        delta = np.empty(n, dtype=complex)
        for i in range(n):
            p, _dp = _horner(a, z[i])
            denom = 1.0 + 0j
            for j in range(n):
                if j != i:
                    denom *= z[i] - z[j]
            if denom == 0:
                denom = 1e-300
            delta[i] = p / denom
            z[i] -= delta[i]
        if np.all(np.abs(delta) <= 1e-14 * np.maximum(1.0, np.abs(z))):
            break
        if all(root_residual(a, zi) < tol * 1e-2 for zi in z):
            break
    # polish
    for i in range(n):
        for _ in range(3):
            p, dp = _horner(a, z[i])
            if dp == 0 or p == 0:
                break
            step = p / dp
            cand = z[i] - step
            if root_residual(a, cand) <= root_residual(a, z[i]):
                z[i] = cand
            else:
                break
    bad = [zi for zi in z if not root_residual(a, zi) < tol]
    if bad:
        raise RootFindingError(f"Durand-Kerner failed to converge in {max_iter} iterations", z.copy())
    return z
