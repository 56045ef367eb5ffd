"""
Relative class numbers h_p^- of p-th cyclotomic fields.
"""

from .analytic import ANALYTIC_CAP, analytic_product, certify_integer, hminus_analytic_value, hminus_initial_bits
from .bernoulli import b1_chi, b1_norm
from .kummer import DEFAULT_ORACLE_CEILING, compute_hminus, g_factor_log, hminus_analytic, kummer_log_ratio
from .maillet import bareiss_determinant, maillet_determinant, maillet_hminus, maillet_matrix
from .models import HminusMethod, RelativeClassNumberRecord

__all__ = [
    "ANALYTIC_CAP",
    "DEFAULT_ORACLE_CEILING",
    "HminusMethod",
    "RelativeClassNumberRecord",
    "analytic_product",
    "b1_chi",
    "b1_norm",
    "bareiss_determinant",
    "certify_integer",
    "compute_hminus",
    "g_factor_log",
    "hminus_analytic",
    "hminus_analytic_value",
    "hminus_initial_bits",
    "kummer_log_ratio",
    "maillet_determinant",
    "maillet_hminus",
    "maillet_matrix",
]
