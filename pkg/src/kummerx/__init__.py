"""
kummerx - relative class numbers of p-th cyclotomic fields and explicit
bounds for Dirichlet L-functions modulo p near s = 1.

- Exact h_p^- by the analytic class number formula and by Maillet determinants
- Certified ball arithmetic for L-values, their logarithmic derivatives and f(s)
- Verification sweeps for every explicit bound, with cached, resumable scans
"""

# Main API
from .bounds import BoundId, BoundReport, verify
from .classnumber import compute_hminus, kummer_log_ratio
from .lfunc import f_at_one, f_derivative, siegel_scan

# Logging utilities
from .utils.logger import set_log_level

__version__ = "0.1.0"

__all__ = [
    "BoundId",
    "BoundReport",
    "compute_hminus",
    "f_at_one",
    "f_derivative",
    "kummer_log_ratio",
    "set_log_level",
    "siegel_scan",
    "verify",
]
