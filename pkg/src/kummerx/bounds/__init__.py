"""
Explicit bound expressions and the sweeps that check them.

log log and log log log are natural-base iterated logarithms throughout.
"""

from .crossover import STATED_THRESHOLD, cor33_crossover, cor33_direct, crossover_point, summarize_crossover
from .formulas import (
    NORMALIZING_PRIME,
    SigmaNu,
    best_taylor_bound,
    c_p_nu,
    cor33_direct_rhs,
    cor33_rhs,
    default_c,
    floor_log,
    lemma22_rhs,
    lemma23_rhs,
    log_zeta_majorant_rhs,
    right_endpoint,
    sigma_nu,
    sigma_nu_point,
    taylor_orders,
    taylor_worst_case_bound,
    thm11_main_term,
    thm31_bound,
)
from .models import BoundId, BoundReport, CrossoverReport
from .verify import verify, verify_prime

__all__ = [
    "BoundId",
    "BoundReport",
    "CrossoverReport",
    "NORMALIZING_PRIME",
    "STATED_THRESHOLD",
    "SigmaNu",
    "best_taylor_bound",
    "c_p_nu",
    "cor33_crossover",
    "cor33_direct",
    "cor33_direct_rhs",
    "cor33_rhs",
    "crossover_point",
    "default_c",
    "floor_log",
    "lemma22_rhs",
    "lemma23_rhs",
    "log_zeta_majorant_rhs",
    "right_endpoint",
    "sigma_nu",
    "sigma_nu_point",
    "summarize_crossover",
    "taylor_orders",
    "taylor_worst_case_bound",
    "thm11_main_term",
    "thm31_bound",
    "verify",
    "verify_prime",
]
