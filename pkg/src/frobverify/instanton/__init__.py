"""Instanton data (n = 0, 1, 2), the path gamma(w) and the hypersurface scaffolding."""

from .checks import euler_identity_suite, s3_equivariance_suite, homogeneity_suite
from .companions import GPlusMinusData, g_plus_minus
from .dataset import (
    SUPPORTED_N,
    T_OF_W,
    DataIntegrityError,
    InstantonDataset,
    PartialDataError,
    UnsupportedInstantonError,
    along_gamma,
    cross_ratio_of_w,
    dataset,
    gamma,
    gamma_map,
    permute_z,
    pullback_coeff,
    pullback_ratfun,
)

__all__ = [
    "DataIntegrityError",
    "GPlusMinusData",
    "InstantonDataset",
    "PartialDataError",
    "SUPPORTED_N",
    "T_OF_W",
    "UnsupportedInstantonError",
    "along_gamma",
    "cross_ratio_of_w",
    "dataset",
    "euler_identity_suite",
    "g_plus_minus",
    "gamma",
    "gamma_map",
    "homogeneity_suite",
    "permute_z",
    "pullback_coeff",
    "pullback_ratfun",
    "s3_equivariance_suite",
]
