"""
h_p^- from the class number formula in Bernoulli form:

    h_p^- = 2p * prod over odd chi of (-B_{1,chi}/2).
"""

from math import ceil, log2
from typing import Optional, Tuple

from mpmath import iv, mp

from ..arith.primes import require_odd_prime
from ..chars.models import Character
from ..core.ball import GUARD_BITS, BallComplex, BallReal, working_precision
from ..core.exceptions import CertificationError, InvalidInputError
from ..core.precision import PrecisionPolicy, escalate
from ..utils.logger import get_logger
from .bernoulli import b1_sum

logger = get_logger(__name__)

ANALYTIC_CAP = 4001
SANITY_GAP = mp.ldexp(1, -8)


def hminus_initial_bits(p: int) -> int:
    """ceil((p/4) log2 p) + 128: h_p^- has about (p/4) log2 p bits at most."""
    return ceil(p / 4 * log2(p)) + 128


def analytic_product(p: int, prec: int) -> BallComplex:
    """2p * prod over odd j (ascending) of -B_{1,chi_j}/2."""
    half = (p - 1) // 2
    bits = prec + GUARD_BITS
    with working_precision(bits):
        factors = {}
        for j in range(1, half + 1, 2):
            re, im = b1_sum(Character(p, j), bits)
            factors[j] = (-re / (2 * p), -im / (2 * p))
        re, im = iv.mpf(2 * p), iv.mpf(0)
        for j in range(1, p - 1, 2):
            if j <= half:
                f_re, f_im = factors[j]
            else:
                f_re, f_im = factors[p - 1 - j]
                f_im = -f_im
            re, im = re * f_re - im * f_im, re * f_im + im * f_re
        return BallComplex(BallReal(re, prec), BallReal(im, prec))


def certify_integer(product: BallComplex) -> Tuple[int, object]:
    """The unique positive integer enclosed by a real-valued product, with its distance to the midpoint."""
    if not product.im.contains_zero():
        raise CertificationError("imaginary part of the product does not contain 0")
    value = abs(product.re)
    if not value.radius < 0.25:
        raise CertificationError(f"real enclosure too wide (radius {mp.nstr(value.radius, 5)})")
    mid = value.midpoint
    h = int(mp.nint(mid))
    gap = abs(mp.fsub(mid, h, exact=True))
    if not gap < 0.25 or not value.contains(h) or h < 1:
        raise CertificationError(f"no integer within 1/4 of {mp.nstr(mid, 20)}")
    return h, gap


def hminus_analytic_value(
    p: int,
    policy: Optional[PrecisionPolicy] = None,
    prec: Optional[int] = None,
) -> Tuple[int, int, object]:
    """(h_p^-, bits used, integrality gap) via the certified Bernoulli product."""
    p = require_odd_prime(p)
    if p > ANALYTIC_CAP:
        raise InvalidInputError(f"p={p} exceeds the analytic feasibility cap {ANALYTIC_CAP}")
    requested = prec if prec is not None else (policy.initial_bits if policy else 0)
    start = max(requested, hminus_initial_bits(p))
    cap = max(policy.max_bits if policy else 0, 4 * start)
    schedule = PrecisionPolicy(initial_bits=start, max_bits=cap)
    used = {}

    def attempt(bits: int):
        used["bits"] = bits
        with working_precision(bits + GUARD_BITS):
            return certify_integer(analytic_product(p, bits))

    h, gap = escalate(attempt, schedule, what=f"h_p^- p={p}")
    if not gap < SANITY_GAP:
        logger.warning(f"p={p}: integrality gap {mp.nstr(gap, 5)} exceeds 2^-8")
    return h, used["bits"], gap
