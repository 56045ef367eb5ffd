"""
Where the explicit bound on |f(1)| becomes strong enough for the
h_p^- <= 2p (p/39)^((p - 1)/4) estimate.
"""

from typing import Iterable, List, Optional

from ..arith.primes import sieve_primes
from ..classnumber.models import RelativeClassNumberRecord
from ..core.ball import DEFAULT_PRECISION, GUARD_BITS, BallReal, working_precision
from ..core.exceptions import InvalidInputError
from ..utils.logger import get_logger
from .formulas import cor33_direct_rhs, cor33_rhs, default_c, thm31_bound
from .models import BoundId, BoundReport, CrossoverReport

logger = get_logger(__name__)

STATED_THRESHOLD = 9649
# the comparison is made in the worst case, with an exceptional zero assumed
WORST_CASE_INDICATOR = 1


def crossover_point(p: int, prec: int = DEFAULT_PRECISION) -> BoundReport:
    """thm31_bound(p, default_c(p), 1) against ((p - 1)/4) log(4 pi^2 / 39)."""
    c = default_c(p, prec)
    lhs = thm31_bound(p, c, WORST_CASE_INDICATOR, prec)
    rhs = cor33_rhs(p, prec)
    return BoundReport.compare(
        BoundId.COR33_CROSSOVER,
        p,
        lhs,
        rhs,
        parameters={"c": c.nstr(8), "indicator": str(WORST_CASE_INDICATOR)},
    )


def summarize_crossover(p_lo: int, p_hi: int, reports: Iterable[BoundReport]) -> CrossoverReport:
    """Largest failing prime and the prime from which every later one passes."""
    ordered = sorted(reports, key=lambda r: r.p)
    failing = [r.p for r in ordered if not r.passed]
    largest_failing: Optional[int] = failing[-1] if failing else None
    first_permanent_pass: Optional[int] = None
    for report in ordered:
        if largest_failing is None or report.p > largest_failing:
            first_permanent_pass = report.p
            break
    return CrossoverReport(
        p_lo=p_lo,
        p_hi=p_hi,
        reports=ordered,
        largest_failing=largest_failing,
        first_permanent_pass=first_permanent_pass,
    )


def cor33_crossover(p_lo: int, p_hi: int, prec: int = DEFAULT_PRECISION) -> CrossoverReport:
    """Scan the primes in [p_lo, p_hi]; the bound arithmetic needs p > 500."""
    if p_lo > p_hi:
        raise InvalidInputError(f"empty range [{p_lo}, {p_hi}]")
    primes: List[int] = [q for q in sieve_primes(p_hi) if q >= max(p_lo, 501)]
    logger.info(f"crossover scan over {len(primes)} primes in [{p_lo}, {p_hi}]")
    summary = summarize_crossover(p_lo, p_hi, (crossover_point(q, prec) for q in primes))
    if summary.largest_failing is not None:
        logger.info(f"largest failing prime {summary.largest_failing}")
    return summary


def cor33_direct(
    p: int,
    record: RelativeClassNumberRecord,
    prec: int = DEFAULT_PRECISION,
) -> BoundReport:
    """
    log h_p^- against log(2p) + ((p - 1)/4) log(p/39) for a computed h_p^-.

    Below the stated threshold the estimate is not claimed, so those reports
    are informational.
    """
    if record.p != p:
        raise InvalidInputError(f"record for p={record.p} passed for p={p}")
    with working_precision(prec + GUARD_BITS):
        lhs = BallReal(record.h_minus).log()
    lhs.precision = prec
    rhs = cor33_direct_rhs(p, prec)
    return BoundReport.compare(
        BoundId.COR33_DIRECT,
        p,
        lhs,
        rhs,
        parameters={"h_minus": str(record.h_minus)},
        notes="below the stated threshold" if p <= STATED_THRESHOLD else "",
        informational=p <= STATED_THRESHOLD,
    )
