"""
Verification sweeps: computed quantities against the explicit bounds.

Each check produces one BoundReport per grid point. Points outside a bound's
domain, or beyond what is feasible to compute, are reported as skipped.
"""

from typing import Callable, Dict, Iterable, List, Optional

from ..arith.pisum import bt_bound, pi_sum
from ..arith.primes import SIEVE_LIMIT, require_odd_prime
from ..chars.table import odd_characters
from ..classnumber.kummer import compute_hminus, kummer_log_ratio
from ..config.models import RunConfig, resolve_x
from ..core.ball import GUARD_BITS, BallReal, describe, exact_real, working_precision
from ..core.exceptions import DomainError
from ..core.precision import escalate
from ..lfunc.fvalues import f_at_one, f_derivatives
from ..lfunc.identity import eq2_components
from ..lfunc.lvalues import LFunctionBank
from ..lfunc.models import SiegelZeroReport
from ..lfunc.siegel import siegel_scan
from ..utils.logger import get_logger
from .crossover import cor33_direct, crossover_point
from .formulas import (
    NORMALIZING_PRIME,
    best_taylor_bound,
    default_c,
    lemma22_rhs,
    lemma23_rhs,
    log_zeta_majorant_rhs,
    right_endpoint,
    thm11_main_term,
    thm31_bound,
)
from .models import BoundId, BoundReport

logger = get_logger(__name__)


class _Context:
    """Per-prime state shared by the checks of one sweep step."""

    def __init__(self, p: int, config: RunConfig):
        self.p = p
        self.config = config
        self.prec = config.prec
        self.params = config.euler_maclaurin()
        self._siegel: Dict[str, SiegelZeroReport] = {}

    def siegel(self, c) -> SiegelZeroReport:
        key = describe(c)
        if key not in self._siegel:
            self._siegel[key] = siegel_scan(self.p, c, self.prec, self.params, self.config.precision)
        return self._siegel[key]

    def indicator(self, siegel: SiegelZeroReport) -> int:
        return 1 if self.config.force_siegel else siegel.indicator

    def theorem_c(self):
        """default_c(p) unless overridden."""
        if self.config.c_override is not None:
            return self.config.c_for()
        return default_c(self.p, self.prec)

    def skip(self, bound_id: BoundId, notes: str, **parameters: str) -> BoundReport:
        logger.info(f"{bound_id} p={self.p}: skipped ({notes})")
        return BoundReport.skip(bound_id, self.p, notes, parameters)


def _check_lemma21(ctx: _Context) -> List[BoundReport]:
    p = ctx.p
    if p <= NORMALIZING_PRIME:
        return [ctx.skip(BoundId.LEMMA21, f"the bound is stated for p > {NORMALIZING_PRIME}")]
    reports = []
    for expression in ctx.config.grids.x_values:
        x = resolve_x(expression, p)
        if x <= p:
            logger.debug(f"lemma21 p={p}: x={x} not above p, dropped")
            continue
        if x > SIEVE_LIMIT:
            reports.append(ctx.skip(BoundId.LEMMA21, f"x above the sieve limit {SIEVE_LIMIT}", x=str(x)))
            continue
        bound = bt_bound(p, x, ctx.prec)
        for a in (1, -1):
            pi = pi_sum(p, a, x)
            with working_precision(ctx.prec + GUARD_BITS):
                lhs = BallReal(pi.value)
            reports.append(BoundReport.compare(
                BoundId.LEMMA21,
                p,
                lhs,
                bound,
                parameters={"x": str(x), "class": f"{a:+d}"},
                notes=f"{pi.terms} prime powers",
            ))
    return reports


def _sigma_grid(ctx: _Context, c, multiples) -> List:
    return [(t, right_endpoint(ctx.p, c, exact_real(t), ctx.prec)) for t in multiples]


def _derivative_reports(
    ctx: _Context,
    bound_id: BoundId,
    multiples,
    rhs: Callable[[int, BallReal, int], BallReal],
) -> List[BoundReport]:
    c = ctx.config.c_for()
    siegel = ctx.siegel(c)
    indicator = ctx.indicator(siegel)
    nus = ctx.config.grids.nu_values
    reports = []
    for t, sigma in _sigma_grid(ctx, c, multiples):
        values = f_derivatives(
            ctx.p, sigma, max(nus), c, siegel, ctx.prec, ctx.params, ctx.config.precision
        )
        for nu in nus:
            parameters = {"nu": str(nu), "sigma": sigma.nstr(12), "t": str(t), "c": describe(c),
                          "indicator": str(indicator)}
            try:
                bound = rhs(nu, sigma, indicator)
            except DomainError as e:
                reports.append(ctx.skip(bound_id, str(e), **parameters))
                continue
            reports.append(BoundReport.compare(bound_id, ctx.p, abs(values[nu].value), bound, parameters))
    return reports


def _check_lemma22(ctx: _Context) -> List[BoundReport]:
    if ctx.p < NORMALIZING_PRIME:
        return [ctx.skip(BoundId.LEMMA22, f"the estimate is stated for p >= {NORMALIZING_PRIME}")]
    c = ctx.config.c_for()
    return _derivative_reports(
        ctx,
        BoundId.LEMMA22,
        ctx.config.grids.sigma_fractions,
        lambda nu, sigma, indicator: lemma22_rhs(ctx.p, nu, sigma, c, indicator, ctx.prec),
    )


def _check_lemma23(ctx: _Context) -> List[BoundReport]:
    c = ctx.config.c_for()
    try:
        lemma23_rhs(ctx.p, 0, c, ctx.prec)
    except DomainError as e:
        return [ctx.skip(BoundId.LEMMA23, str(e))]
    return _derivative_reports(
        ctx,
        BoundId.LEMMA23,
        ctx.config.grids.sigma_multipliers,
        lambda nu, sigma, indicator: lemma23_rhs(ctx.p, nu, c, ctx.prec),
    )


def _largest_log_modulus(ctx: _Context, sigma: BallReal):
    """max over odd chi of |log |L(sigma, chi)||, with the character attaining it."""

    def attempt(bits: int):
        bank = LFunctionBank(ctx.p, sigma, 0, bits, ctx.params)
        worst = None
        for chi in odd_characters(ctx.p):
            if chi.conjugate_index < chi.j:
                continue
            value = bank.l_derivs(chi)[0]
            with working_precision(bank.bits):
                size = abs(abs(value).log())
            if worst is None or size.upper > worst[1].upper:
                worst = (chi.j, size)
        return worst

    return escalate(attempt, ctx.config.precision, start=ctx.prec, what=f"log |L| p={ctx.p}")


def _check_log_zeta_majorant(ctx: _Context) -> List[BoundReport]:
    c = ctx.config.c_for()
    reports = []
    for t, sigma in _sigma_grid(ctx, c, ctx.config.grids.sigma_fractions):
        j, lhs = _largest_log_modulus(ctx, sigma)
        reports.append(BoundReport.compare(
            BoundId.LOG_ZETA_MAJORANT,
            ctx.p,
            lhs,
            log_zeta_majorant_rhs(sigma, ctx.prec),
            parameters={"sigma": sigma.nstr(12), "t": str(t), "c": describe(c), "character": str(j)},
        ))
    return reports


def _f_at_one(ctx: _Context, c):
    siegel = ctx.siegel(c)
    value = f_at_one(ctx.p, c, ctx.prec, siegel, ctx.params, ctx.config.precision)
    return abs(value.value), ctx.indicator(siegel)


def _check_thm31(ctx: _Context) -> List[BoundReport]:
    if ctx.p <= NORMALIZING_PRIME:
        return [ctx.skip(BoundId.THM31, f"the bound is stated for p > {NORMALIZING_PRIME}")]
    c = ctx.theorem_c()
    lhs, indicator = _f_at_one(ctx, c)
    rhs = thm31_bound(ctx.p, c, indicator, ctx.prec)
    return [BoundReport.compare(
        BoundId.THM31, ctx.p, lhs, rhs, parameters={"c": describe(c), "indicator": str(indicator)}
    )]


def _check_thm31_taylor(ctx: _Context) -> List[BoundReport]:
    if ctx.p <= NORMALIZING_PRIME:
        return [ctx.skip(BoundId.THM31_TAYLOR, f"the bound is stated for p > {NORMALIZING_PRIME}")]
    c = ctx.theorem_c()
    lhs, indicator = _f_at_one(ctx, c)
    nu, rhs = best_taylor_bound(ctx.p, c, indicator, ctx.prec)
    return [BoundReport.compare(
        BoundId.THM31_TAYLOR,
        ctx.p,
        lhs,
        rhs,
        parameters={"c": describe(c), "indicator": str(indicator), "nu": str(nu)},
    )]


def _record(ctx: _Context):
    return compute_hminus(ctx.p, None, ctx.config.precision, ctx.config.oracle_ceiling)


def _check_thm11(ctx: _Context) -> List[BoundReport]:
    p = ctx.p
    if p <= NORMALIZING_PRIME:
        return [ctx.skip(BoundId.THM11, f"the explicit bound is stated for p > {NORMALIZING_PRIME}")]
    if p > ctx.config.analytic_cap:
        return [ctx.skip(BoundId.THM11, f"h_p^- beyond the feasibility cap {ctx.config.analytic_cap}")]
    c = ctx.theorem_c()
    siegel = ctx.siegel(c)
    if siegel.present:
        return [ctx.skip(BoundId.THM11, "exceptional zero present")]
    indicator = ctx.indicator(siegel)
    lhs = abs(kummer_log_ratio(p, ctx.prec, _record(ctx)))
    rhs = thm31_bound(p, c, indicator, ctx.prec)
    main = thm11_main_term(p, indicator, ctx.prec)
    return [BoundReport.compare(
        BoundId.THM11,
        p,
        lhs,
        rhs,
        parameters={"c": describe(c), "indicator": str(indicator)},
        notes=f"main term {main.nstr(8)}",
    )]


def _check_eq2(ctx: _Context) -> List[BoundReport]:
    p = ctx.p
    truncation = ctx.config.grids.eq2_truncation
    reports = []
    for sigma in ctx.config.grids.eq2_sigmas:
        parameters = {"sigma": str(exact_real(sigma)), "X": str(truncation)}
        if truncation < p * p:
            reports.append(ctx.skip(BoundId.EQ2_IDENTITY, f"truncation below p^2 = {p * p}", **parameters))
            continue
        parts = escalate(
            lambda bits: eq2_components(p, exact_real(sigma), truncation, bits),
            ctx.config.precision,
            start=ctx.prec,
            what=f"identity p={p}",
        )
        with working_precision(ctx.prec + GUARD_BITS):
            gap = abs(parts.lhs - parts.truncated)
        report = BoundReport.compare(
            BoundId.EQ2_IDENTITY,
            p,
            gap,
            parts.stated_tail,
            parameters,
            notes=f"residual {parts.residual.nstr(6)} over {parts.terms} prime powers",
        )
        report.passed = report.passed and parts.residual.contains_zero()
        reports.append(report)
    return reports


def _check_cor33_crossover(ctx: _Context) -> List[BoundReport]:
    if ctx.p <= NORMALIZING_PRIME:
        return [ctx.skip(BoundId.COR33_CROSSOVER, f"the bound arithmetic needs p > {NORMALIZING_PRIME}")]
    return [crossover_point(ctx.p, ctx.prec)]


def _check_cor33_direct(ctx: _Context) -> List[BoundReport]:
    if ctx.p > ctx.config.analytic_cap:
        return [ctx.skip(BoundId.COR33_DIRECT, f"h_p^- beyond the feasibility cap {ctx.config.analytic_cap}")]
    return [cor33_direct(ctx.p, _record(ctx), ctx.prec)]


_CHECKS: Dict[BoundId, Callable[[_Context], List[BoundReport]]] = {
    BoundId.LEMMA21: _check_lemma21,
    BoundId.LEMMA22: _check_lemma22,
    BoundId.LEMMA23: _check_lemma23,
    BoundId.LOG_ZETA_MAJORANT: _check_log_zeta_majorant,
    BoundId.THM31: _check_thm31,
    BoundId.THM31_TAYLOR: _check_thm31_taylor,
    BoundId.THM11: _check_thm11,
    BoundId.EQ2_IDENTITY: _check_eq2,
    BoundId.COR33_CROSSOVER: _check_cor33_crossover,
    BoundId.COR33_DIRECT: _check_cor33_direct,
}


def verify_prime(bound_id, p: int, config: Optional[RunConfig] = None) -> List[BoundReport]:
    """All reports of one bound at one prime."""
    bound_id = bound_id if isinstance(bound_id, BoundId) else BoundId.parse(bound_id)
    p = require_odd_prime(p)
    config = config or RunConfig()
    reports = _CHECKS[bound_id](_Context(p, config))
    failed = sum(1 for r in reports if r.failed)
    if failed:
        logger.warning(f"{bound_id} p={p}: {failed} of {len(reports)} reports failed")
    return reports


def verify(bound_id, primes: Iterable[int], config: Optional[RunConfig] = None) -> List[BoundReport]:
    """Reports of one bound over the given primes, in ascending p."""
    config = config or RunConfig()
    reports: List[BoundReport] = []
    for p in sorted(set(primes)):
        reports.extend(verify_prime(bound_id, p, config))
    return reports
