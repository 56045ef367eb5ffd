"""
G(p) = 2p (p / 4 pi^2)^((p - 1)/4), the Kummer ratio log(h_p^- / G(p)), and
the record-producing entry point.
"""

from fractions import Fraction
from typing import Optional, Union

from mpmath import iv, mp

from ..arith.primes import require_odd_prime
from ..core.ball import DEFAULT_PRECISION, GUARD_BITS, BallReal, working_precision
from ..core.exceptions import CertificationError, InternalError, InvalidInputError
from ..core.precision import PrecisionPolicy
from ..utils.logger import get_logger
from .analytic import ANALYTIC_CAP, hminus_analytic_value
from .maillet import maillet_hminus
from .models import HminusMethod, RelativeClassNumberRecord

logger = get_logger(__name__)

DEFAULT_ORACLE_CEILING = 199


def g_factor_log(p: int, prec: int = DEFAULT_PRECISION) -> BallReal:
    """log(2p) + ((p - 1)/4)(log p - log 4 pi^2)."""
    p = require_odd_prime(p)
    with working_precision(prec + GUARD_BITS):
        log_p = BallReal(p).log()
        four_pi_sq = BallReal(4 * iv.pi ** 2)
        value = BallReal(2 * p).log() + Fraction(p - 1, 4) * (log_p - four_pi_sq.log())
    value.precision = prec
    return value


def _log_ratio(p: int, h: int, prec: int):
    log_g = g_factor_log(p, prec)
    with working_precision(prec + GUARD_BITS):
        ratio = BallReal(h).log() - log_g
    ratio.precision = prec
    return log_g, ratio


def _record(p: int, h: int, method: HminusMethod, bits: int, gap, prec: int) -> RelativeClassNumberRecord:
    log_g, ratio = _log_ratio(p, h, prec)
    return RelativeClassNumberRecord(
        p=p,
        h_minus=h,
        log_G=log_g,
        log_ratio=ratio,
        method=method,
        precision_bits=bits,
        certified=True,
        integrality_gap=mp.nstr(gap, 6) if gap is not None else None,
    )


def hminus_analytic(
    p: int,
    policy: Optional[PrecisionPolicy] = None,
    prec: Optional[int] = None,
) -> RelativeClassNumberRecord:
    """Certified h_p^- from the Bernoulli product, escalating precision as needed."""
    h, bits, gap = hminus_analytic_value(p, policy, prec)
    return _record(p, h, HminusMethod.ANALYTIC, bits, gap, DEFAULT_PRECISION)


def compute_hminus(
    p: int,
    method: Union[HminusMethod, str, None] = None,
    policy: Optional[PrecisionPolicy] = None,
    oracle_ceiling: int = DEFAULT_ORACLE_CEILING,
    prec: Optional[int] = None,
) -> RelativeClassNumberRecord:
    """
    h_p^- by the requested method.

    Below the oracle ceiling both methods always run and must agree; the
    default above it is analytic only.
    """
    p = require_odd_prime(p)
    try:
        method = HminusMethod(method) if method is not None else None
    except ValueError as e:
        raise InvalidInputError(f"unknown method {method!r}") from e
    if method is None:
        method = HminusMethod.BOTH if p <= oracle_ceiling else HminusMethod.ANALYTIC
    elif method is HminusMethod.ANALYTIC and p <= oracle_ceiling:
        method = HminusMethod.BOTH

    if method is HminusMethod.MAILLET:
        logger.info(f"p={p}: Maillet determinant")
        return _record(p, maillet_hminus(p), method, 0, None, DEFAULT_PRECISION)

    if p > ANALYTIC_CAP:
        raise InvalidInputError(f"p={p} exceeds the analytic feasibility cap {ANALYTIC_CAP}")
    h, bits, gap = hminus_analytic_value(p, policy, prec)
    if method is HminusMethod.BOTH:
        oracle = maillet_hminus(p)
        if oracle != h:
            raise InternalError(f"p={p}: analytic h={h} disagrees with Maillet h={oracle}")
    return _record(p, h, method, bits, gap, DEFAULT_PRECISION)


def kummer_log_ratio(
    p: int,
    prec: int = DEFAULT_PRECISION,
    record: Optional[RelativeClassNumberRecord] = None,
) -> BallReal:
    """log h_p^- - log G(p) for a certified h_p^-."""
    p = require_odd_prime(p)
    if record is None:
        record = compute_hminus(p)
    if record.p != p:
        raise InvalidInputError(f"record for p={record.p} passed for p={p}")
    if not record.certified:
        raise CertificationError(f"h_p^- for p={p} is not certified")
    return _log_ratio(p, record.h_minus, prec)[1]
