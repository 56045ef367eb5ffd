"""
Scan for an exceptional real zero of the quadratic L-function modulo p.
"""

from typing import Any, Optional

from mpmath import mp

from ..arith.primes import require_odd_prime
from ..chars.table import quadratic_character
from ..core.ball import DEFAULT_PRECISION, GUARD_BITS, BallReal, exact_real, working_precision
from ..core.exceptions import InvalidInputError, UndeterminedSignError
from ..core.precision import PrecisionPolicy, escalate
from ..hurwitz.models import EulerMaclaurinParameters
from ..utils.logger import get_logger
from .lvalues import LFunctionBank
from .models import ZERO_FREE_CONSTANT, SiegelMethod, SiegelZeroReport

logger = get_logger(__name__)


def left_endpoint(p: int, c: Any) -> BallReal:
    """1 - 1/(c log p)."""
    return 1 - 1 / (exact_real(c) * BallReal(p).log())


def quadratic_l_value(
    p: int,
    sigma: Any,
    prec: int,
    params: Optional[EulerMaclaurinParameters] = None,
) -> BallReal:
    """L(sigma, chi_quad) for a real point sigma; real since the character is."""
    bank = LFunctionBank(p, sigma, 0, prec, params)
    value = bank.l_derivs(quadratic_character(p))[0]
    with working_precision(bank.bits):
        out = value.real_widened()
    out.precision = prec
    return out


def _bisect(p: int, c: Any, lower: BallReal, bits: int, params) -> SiegelZeroReport:
    """Narrow [sigma_0, 1] around the sign change down to width 2^-(bits/4)."""
    with working_precision(bits + GUARD_BITS):
        lo = lower.upper
        hi = mp.mpf(1)
        width = mp.ldexp(1, -(bits // 4))
    steps = 0
    while mp.fsub(hi, lo, exact=True) > width:
        mid = mp.ldexp(mp.fadd(lo, hi, exact=True), -1)
        value = quadratic_l_value(p, mid, bits, params)
        if value.is_negative():
            lo = mid
        elif value.is_positive():
            hi = mid
        else:
            raise UndeterminedSignError(f"sign of L(sigma, chi_quad) undecided near sigma={mp.nstr(mid, 12)}")
        steps += 1
    with working_precision(bits + GUARD_BITS):
        beta = BallReal.from_bounds(lo, hi)
    logger.warning(f"p={p}: exceptional zero located after {steps} bisection steps")
    return SiegelZeroReport(
        p=p,
        present=True,
        c=c,
        method=SiegelMethod.BISECTION,
        certified=True,
        interval_lower=lower,
        beta=beta,
        precision_bits=bits,
    )


def siegel_scan(
    p: int,
    c: Any = ZERO_FREE_CONSTANT,
    prec: int = DEFAULT_PRECISION,
    params: Optional[EulerMaclaurinParameters] = None,
    policy: Optional[PrecisionPolicy] = None,
) -> SiegelZeroReport:
    """
    Decide whether L(s, chi_quad) vanishes on [1 - 1/(c log p), 1].

    For p = 1 (mod 4) the quadratic character is even and no odd L-function
    can carry the zero. Otherwise a certified positive value at the left
    endpoint excludes a zero, given that the region holds at most one simple
    real zero and L(1, chi_quad) > 0.
    """
    p = require_odd_prime(p)
    c = exact_real(c)
    with working_precision(prec + GUARD_BITS):
        if BallReal(c).certainly_lt(ZERO_FREE_CONSTANT):
            raise InvalidInputError(f"c must be at least {float(ZERO_FREE_CONSTANT)}, got {c}")
        lower = left_endpoint(p, c)

    if p % 4 == 1:
        return SiegelZeroReport(
            p=p,
            present=False,
            c=c,
            method=SiegelMethod.NOT_QUADRATIC,
            certified=True,
            interval_lower=lower,
            precision_bits=prec,
        )

    def attempt(bits: int) -> SiegelZeroReport:
        with working_precision(bits + GUARD_BITS):
            sigma0 = left_endpoint(p, c)
        value = quadratic_l_value(p, sigma0, bits, params)
        if value.is_positive():
            logger.debug(f"p={p}: L(sigma_0, chi_quad) = {value.nstr(10)} > 0")
            return SiegelZeroReport(
                p=p,
                present=False,
                c=c,
                method=SiegelMethod.ENDPOINT_POSITIVITY,
                certified=True,
                interval_lower=sigma0,
                endpoint_value=value,
                precision_bits=bits,
            )
        if value.is_negative():
            report = _bisect(p, c, sigma0, bits, params)
            report.endpoint_value = value
            return report
        raise UndeterminedSignError(f"p={p}: L(sigma_0, chi_quad) enclosure straddles zero at {bits} bits")

    policy = policy or PrecisionPolicy(initial_bits=max(prec, 64))
    return escalate(attempt, policy, start=prec, what=f"Siegel scan p={p}")
