"""Special functions: complex gamma, Mittag-Leffler, Fox H."""
from .foxh import (
    ConvergenceProfile,
    FoxHParams,
    MellinBarnesConfig,
    foxh_eval,
    foxh_inverse_laplace,
    foxh_laplace,
    foxh_rl_derivative,
    foxh_validate,
    foxh_value,
)
from .gamma import gamma_complex, loggamma, rgamma_array
from .mittag_leffler import mittag_leffler, mittag_leffler_array

__all__ = [
    "ConvergenceProfile",
    "FoxHParams",
    "MellinBarnesConfig",
    "foxh_eval",
    "foxh_inverse_laplace",
    "foxh_laplace",
    "foxh_rl_derivative",
    "foxh_validate",
    "foxh_value",
    "gamma_complex",
    "loggamma",
    "rgamma_array",
    "mittag_leffler",
    "mittag_leffler_array",
]
