"""
Orthogonality identity: for sigma >= 2,

    sum over odd chi of Log L(sigma, chi)
        = (p - 1)/2 * (sum_{q^m = 1 (p)} - sum_{q^m = -1 (p)}) 1/(m q^(m sigma)).
"""

from fractions import Fraction
from typing import Any, List

from mpmath import iv

from ..arith.models import PrimePower
from ..arith.primes import SIEVE_LIMIT, prime_powers_in_class, require_odd_prime
from ..core.ball import DEFAULT_PRECISION, GUARD_BITS, BallReal, exact_real, working_precision
from ..core.exceptions import DomainError, InvalidInputError
from ..utils.logger import get_logger
from .lvalues import LFunctionBank
from .models import Eq2Residual

logger = get_logger(__name__)

MAX_TRUNCATION = 10 * SIEVE_LIMIT


def weighted_power_sum(powers: List[PrimePower], sigma: Fraction, bits: int) -> BallReal:
    """Enclosure of sum 1/(m q^(m sigma)) over the given prime powers."""
    if sigma.denominator == 1:
        # integral sigma: fixed-point integer sum, each term floored
        exponent = int(sigma)
        scale = bits + 64
        one = 1 << scale
        total = 0
        for pp in powers:
            total += one // (pp.m * pp.value ** exponent)
        with working_precision(bits):
            low = iv.mpf(total) / one
            high = iv.mpf(total + len(powers)) / one
            return BallReal(iv.mpf((low.a, high.b)))
    with working_precision(bits):
        s = iv.mpf(sigma.numerator) / sigma.denominator
        total = iv.mpf(0)
        for pp in powers:
            total += iv.exp(-s * iv.ln(pp.value)) / pp.m
        return BallReal(total)


def eq2_components(p: int, sigma: Any, truncation: int, prec: int = DEFAULT_PRECISION) -> Eq2Residual:
    p = require_odd_prime(p)
    sigma = exact_real(sigma)
    if not isinstance(sigma, Fraction):
        raise InvalidInputError("sigma must be an exact rational here")
    if sigma < 2:
        raise DomainError(f"the identity is checked for sigma >= 2 only, got {sigma}")
    truncation = int(truncation)
    if truncation < p * p:
        raise DomainError(f"truncation must be at least p^2 = {p * p}, got {truncation}")
    if truncation > MAX_TRUNCATION:
        raise InvalidInputError(f"truncation above {MAX_TRUNCATION} is not supported")

    bits = prec + GUARD_BITS
    bank = LFunctionBank(p, sigma, 0, prec)
    lhs = bank.odd_log_sums()[0]

    plus = prime_powers_in_class(p, 1, truncation)
    minus = prime_powers_in_class(p, -1, truncation)
    s_plus = weighted_power_sum(plus, sigma, bits)
    s_minus = weighted_power_sum(minus, sigma, bits)

    with working_precision(bits):
        half = Fraction(p - 1, 2)
        truncated = half * (s_plus - s_minus)
        x = BallReal(truncation)
        s = BallReal(sigma)
        # each class holds at most X^-s + X^(1-s)/(p(s-1)) beyond X; the two
        # class tails enter with opposite signs, so their difference is within one
        tail = half * ((-s * x.log()).exp() + ((1 - s) * x.log()).exp() / (p * (s - 1)))
        stated = half * ((1 - s) * x.log()).exp() / (s - 1)
        residual = (lhs - truncated).widen(tail)
        for ball in (lhs, truncated, tail, stated, residual):
            ball.precision = prec

    logger.debug(f"p={p}: identity residual {residual.nstr(6)} over {len(plus) + len(minus)} prime powers")
    return Eq2Residual(
        p=p,
        sigma=sigma,
        truncation=truncation,
        lhs=lhs,
        truncated=truncated,
        tail_bound=tail,
        stated_tail=stated,
        residual=residual,
        terms=len(plus) + len(minus),
    )


def eq2_residual(p: int, sigma: Any, truncation: int, prec: int = DEFAULT_PRECISION) -> BallReal:
    """Enclosure of (left side - truncated right side), widened by the tail bound."""
    return eq2_components(p, sigma, truncation, prec).residual
