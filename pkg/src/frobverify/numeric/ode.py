"""Adaptive integration of holomorphic ODEs along piecewise-linear paths."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import solve_ivp


class IntegrationError(RuntimeError):
    """The integrator stalled; ``s`` and ``state`` are the last good point."""

    def __init__(self, message: str, s: float, state: np.ndarray):
        super().__init__(f"{message} (last good s = {s:.6g})")
        self.s = s
        self.state = state


@dataclass(frozen=True)
class PathSpec:
    """Piecewise-linear path through complex waypoints.

    Waypoints are complex scalars (a path in the plane) or complex vectors
    of a fixed length (a path in C^d).
    """

    waypoints: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.waypoints, dtype=complex)
        if pts.ndim not in (1, 2):
            raise ValueError("waypoints must be scalars or fixed-length vectors")
        if len(pts) < 2:
            raise ValueError("a path needs at least 2 waypoints")
        if not np.all(np.isfinite(pts)):
            raise ValueError("waypoints must be finite")
        steps = np.diff(pts, axis=0)
        lengths = np.abs(steps) if pts.ndim == 1 else np.linalg.norm(steps, axis=1)
        if np.any(lengths == 0):
            raise ValueError("consecutive waypoints must be distinct")
        object.__setattr__(self, "waypoints", pts)

    @property
    def dim(self) -> int:
        return 1 if self.waypoints.ndim == 1 else self.waypoints.shape[1]

    def segment_lengths(self) -> np.ndarray:
        steps = np.diff(self.waypoints, axis=0)
        return np.abs(steps) if self.waypoints.ndim == 1 else np.linalg.norm(steps, axis=1)

    def knots(self) -> np.ndarray:
        """Arclength at each waypoint."""
        return np.concatenate([[0.0], np.cumsum(self.segment_lengths())])

    @property
    def length(self) -> float:
        return float(self.knots()[-1])

    def point(self, s: float):
        knots = self.knots()
        k = int(np.clip(np.searchsorted(knots, s, side="right") - 1, 0, len(knots) - 2))
        frac = (s - knots[k]) / (knots[k + 1] - knots[k])
        return self.waypoints[k] + frac * (self.waypoints[k + 1] - self.waypoints[k])

    @classmethod
    def from_json(cls, text: str) -> "PathSpec":
        data = json.loads(text)
        try:
            pts = [complex(re, im) for re, im in data["waypoints"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"invalid path JSON: {exc}") from None
        return cls(np.array(pts))

    def to_json(self) -> str:
        if self.waypoints.ndim != 1:
            raise ValueError("only planar paths have a JSON form")
        return json.dumps({"waypoints": [[z.real, z.imag] for z in self.waypoints]})

    @classmethod
    def loop(cls, center: complex, radius: float, n: int = 8) -> "PathSpec":
        """Closed polygon around ``center``, starting and ending at ``center + radius``."""
        angles = 2 * np.pi * np.arange(n + 1) / n
        pts = center + radius * np.exp(1j * angles)
        pts[-1] = pts[0]
        return cls(pts)


@dataclass
class Trajectory:
    s: np.ndarray
    points: np.ndarray
    states: np.ndarray
    waypoint_index: list[int] = field(default_factory=list)

    def __iter__(self):
        return iter(zip(self.s, self.states))

    def __len__(self):
        return len(self.s)

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]

    def at_waypoints(self) -> np.ndarray:
        return self.states[self.waypoint_index]


Field = Callable[[object, np.ndarray], np.ndarray]


def integrate_path(
    field: Field,
    path: PathSpec,
    y0: Sequence[complex],
    tol: float = 1e-10,
    max_step: float = np.inf,
) -> Trajectory:
    """Integrate ``dy/dz = field(z, y)`` along ``path``.

    For a planar path ``field`` returns dy/dz. For a path in C^d it returns
    the array of partials of shape ``(d, *y.shape)``, contracted with the
    unit tangent. Each segment is integrated separately by the embedded
    Runge-Kutta 5(4) pair with ``rtol = atol = tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    y = np.array(y0, dtype=complex)
    shape = y.shape
    knots = path.knots()
    pts = path.waypoints
    out_s = [0.0]
    out_p = [pts[0]]
    out_y = [y.copy()]
    marks = [0]
    for k in range(len(pts) - 1):
        a, b = pts[k], pts[k + 1]
        seg = knots[k + 1] - knots[k]
        unit = (b - a) / seg

        if path.dim == 1:
            def rhs(s, yflat, a=a, unit=unit):
                return np.asarray(field(a + s * unit, yflat.reshape(shape)), dtype=complex).ravel() * unit
        else:
            def rhs(s, yflat, a=a, unit=unit):
                grad = np.asarray(field(a + s * unit, yflat.reshape(shape)), dtype=complex)
                return np.tensordot(unit, grad, axes=(0, 0)).ravel()

        sol = solve_ivp(rhs, (0.0, seg), y.ravel(), method="RK45", rtol=tol, atol=tol, max_step=max_step)
        if sol.status != 0:
            last_s = knots[k] + (sol.t[-1] if sol.t.size else 0.0)
            last_y = sol.y[:, -1].reshape(shape) if sol.y.size else y
            raise IntegrationError(f"step size underflow: {sol.message}", float(last_s), last_y)
        for j in range(1, sol.t.size):
            out_s.append(knots[k] + sol.t[j])
            out_p.append(a + sol.t[j] * unit)
            out_y.append(sol.y[:, j].reshape(shape))
        y = out_y[-1].copy()
        marks.append(len(out_s) - 1)
    return Trajectory(np.array(out_s), np.array(out_p), np.array(out_y), marks)
