"""Frobenius metrics in dimension three: exact tests, structural flow, coframes and lifts."""

from .core import (
    DegenerateMetricError,
    FrobeniusTriple,
    MetricTripleW,
    NumericRatFun,
    HomogeneityZeroResult,
    SingularPointError,
    StructuralTrajectory,
    check_homogeneity_zero,
    continued_exact_solution,
    exact_solution,
    integrate_structural,
    numeric_metric,
    principal_sqrt,
    select_sign_triple,
    solution_from_w,
    structural_residual,
    structural_rhs,
    trace,
)
from .lift import (
    LiftError,
    LiftResult,
    LocalSolution,
    companion_coframe,
    coframe_from_solution,
    continue_w,
    cross_ratio,
    eigen_coframe,
    fitted_deviation,
    lift_path,
    lift_to_homogeneity,
    sample_points,
    solution_connection,
)

__all__ = [
    "DegenerateMetricError",
    "FrobeniusTriple",
    "LiftError",
    "LiftResult",
    "LocalSolution",
    "MetricTripleW",
    "NumericRatFun",
    "HomogeneityZeroResult",
    "SingularPointError",
    "StructuralTrajectory",
    "check_homogeneity_zero",
    "coframe_from_solution",
    "companion_coframe",
    "continue_w",
    "continued_exact_solution",
    "cross_ratio",
    "eigen_coframe",
    "exact_solution",
    "fitted_deviation",
    "integrate_structural",
    "lift_path",
    "lift_to_homogeneity",
    "numeric_metric",
    "principal_sqrt",
    "sample_points",
    "select_sign_triple",
    "solution_connection",
    "solution_from_w",
    "structural_residual",
    "structural_rhs",
    "trace",
]
