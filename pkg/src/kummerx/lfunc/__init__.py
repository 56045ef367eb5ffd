"""
Dirichlet L-functions modulo p near s = 1: values, log-derivatives, the
function f, the exceptional-zero scan and the prime-power identity.
"""

from .fvalues import exceptional_zero_term, f_at_one, f_derivative, f_derivatives
from .identity import eq2_components, eq2_residual, weighted_power_sum
from .lvalues import LFunctionBank, l_value_derivs, log_derivs_from_derivs, log_l_derivs
from .models import (
    SIEGEL_ASSUMPTION,
    ZERO_FREE_CONSTANT,
    Eq2Residual,
    FValue,
    SeriesEnclosure,
    SiegelMethod,
    SiegelZeroReport,
)
from .series import dirichlet_log_series, series_tail_bound
from .siegel import left_endpoint, quadratic_l_value, siegel_scan

__all__ = [
    "Eq2Residual",
    "FValue",
    "LFunctionBank",
    "SIEGEL_ASSUMPTION",
    "SeriesEnclosure",
    "SiegelMethod",
    "SiegelZeroReport",
    "ZERO_FREE_CONSTANT",
    "dirichlet_log_series",
    "eq2_components",
    "eq2_residual",
    "exceptional_zero_term",
    "f_at_one",
    "f_derivative",
    "f_derivatives",
    "l_value_derivs",
    "left_endpoint",
    "log_derivs_from_derivs",
    "log_l_derivs",
    "quadratic_l_value",
    "series_tail_bound",
    "siegel_scan",
    "weighted_power_sum",
]
