"""
The function f(s): the sum of log L(s, chi) over odd characters, minus
log(s - beta) when the quadratic L-function has an exceptional zero beta.
"""

from fractions import Fraction
from math import factorial
from typing import Any, List, Optional

from ..arith.primes import require_odd_prime
from ..core.ball import DEFAULT_PRECISION, GUARD_BITS, BallReal, exact_real, working_precision
from ..core.exceptions import DomainError, InvalidInputError
from ..core.precision import PrecisionPolicy, escalate
from ..hurwitz.models import EulerMaclaurinParameters
from ..utils.logger import get_logger
from .lvalues import LFunctionBank
from .models import ZERO_FREE_CONSTANT, FValue, SiegelZeroReport
from .siegel import siegel_scan

logger = get_logger(__name__)


def exceptional_zero_term(order: int, sigma: BallReal, beta: BallReal) -> BallReal:
    """d^nu/dsigma^nu log(sigma - beta)."""
    gap = sigma - beta
    if order == 0:
        return gap.log()
    return (-1) ** (order - 1) * factorial(order - 1) / gap ** order


def _check_sigma(p: int, sigma: BallReal, c: Any) -> None:
    upper = 1 + 2 / (exact_real(c) * BallReal(p).log())
    if not sigma.certainly_gt(1):
        raise DomainError(f"f is evaluated for sigma > 1 here, got sigma = {sigma.nstr(10)}")
    if sigma.certainly_gt(upper):
        raise DomainError(
            f"sigma = {sigma.nstr(10)} lies beyond 1 + 2/(c log p) = {upper.nstr(10)}"
        )


def _f_values(
    p: int,
    sigma: Any,
    order: int,
    c: Any,
    siegel: SiegelZeroReport,
    prec: int,
    params: Optional[EulerMaclaurinParameters],
) -> List[FValue]:
    bank = LFunctionBank(p, sigma, order, prec, params)
    sums = bank.odd_log_sums()
    out = []
    with working_precision(prec + GUARD_BITS):
        for nu, total in enumerate(sums):
            value = total
            if siegel.present:
                value = value - exceptional_zero_term(nu, bank.s, siegel.beta)
            value.precision = prec
            out.append(FValue(p=p, order=nu, sigma=bank.s, value=value, siegel=siegel, c=c))
    return out


def f_derivatives(
    p: int,
    sigma: Any,
    order: int,
    c: Any = ZERO_FREE_CONSTANT,
    siegel: Optional[SiegelZeroReport] = None,
    prec: int = DEFAULT_PRECISION,
    params: Optional[EulerMaclaurinParameters] = None,
    policy: Optional[PrecisionPolicy] = None,
) -> List[FValue]:
    """f^(nu)(sigma) for nu = 0..order, sharing one Hurwitz bank."""
    p = require_odd_prime(p)
    if order < 0:
        raise InvalidInputError(f"derivative order must be >= 0, got {order}")
    c = exact_real(c)
    with working_precision(prec + GUARD_BITS):
        _check_sigma(p, BallReal(sigma), c)
    if siegel is None:
        siegel = siegel_scan(p, c, prec, policy=policy)
    policy = policy or PrecisionPolicy(initial_bits=max(prec, 64))
    return escalate(
        lambda bits: _f_values(p, sigma, order, c, siegel, bits, params),
        policy,
        start=prec,
        what=f"f derivatives p={p}",
    )


def f_derivative(
    p: int,
    nu: int,
    sigma: Any,
    c: Any = ZERO_FREE_CONSTANT,
    siegel: Optional[SiegelZeroReport] = None,
    prec: int = DEFAULT_PRECISION,
    params: Optional[EulerMaclaurinParameters] = None,
    policy: Optional[PrecisionPolicy] = None,
) -> FValue:
    """f^(nu)(sigma) for sigma in (1, 1 + 2/(c log p)]."""
    return f_derivatives(p, sigma, nu, c, siegel, prec, params, policy)[nu]


def f_at_one(
    p: int,
    c: Any = ZERO_FREE_CONSTANT,
    prec: int = DEFAULT_PRECISION,
    siegel: Optional[SiegelZeroReport] = None,
    params: Optional[EulerMaclaurinParameters] = None,
    policy: Optional[PrecisionPolicy] = None,
) -> FValue:
    """f(1) = sum over odd chi of log L(1, chi) - 1_beta log(1 - beta)."""
    p = require_odd_prime(p)
    c = exact_real(c)
    if siegel is None:
        siegel = siegel_scan(p, c, prec, policy=policy)
    policy = policy or PrecisionPolicy(initial_bits=max(prec, 64))
    values = escalate(
        lambda bits: _f_values(p, Fraction(1), 0, c, siegel, bits, params),
        policy,
        start=prec,
        what=f"f(1) p={p}",
    )
    return values[0]
