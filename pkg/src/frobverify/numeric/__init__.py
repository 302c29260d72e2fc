"""Complex floating-point kernel: roots, the w-t quartic, finite differences, ODEs."""

from .fd import derivative, gradient, scalar_derivative
from .ode import IntegrationError, PathSpec, Trajectory, integrate_path
from .quartic import (
    BranchAmbiguityError,
    dt_dw,
    quartic_coeffs,
    quartic_residual,
    solve_w,
    t_of_w,
    track_w,
    w_roots,
)
from .roots import RootFindingError, poly_roots, root_residual

__all__ = [
    "BranchAmbiguityError",
    "IntegrationError",
    "PathSpec",
    "RootFindingError",
    "Trajectory",
    "derivative",
    "dt_dw",
    "gradient",
    "integrate_path",
    "poly_roots",
    "quartic_coeffs",
    "quartic_residual",
    "root_residual",
    "scalar_derivative",
    "solve_w",
    "t_of_w",
    "track_w",
    "w_roots",
]
