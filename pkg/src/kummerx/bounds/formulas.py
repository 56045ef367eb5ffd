"""
Closed-form bound expressions, evaluated in ball arithmetic.

Iterated logarithms are natural: loglog(x) = log log x. The indicator
argument is 1 when an exceptional zero is assumed present and 0 otherwise.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial, log
from typing import Any, Optional

from mpmath import iv

from ..core.ball import DEFAULT_PRECISION, GUARD_BITS, BallReal, exact_real, working_precision
from ..core.exceptions import DomainError, InvalidInputError
from ..lfunc.models import ZERO_FREE_CONSTANT

# Constants of the explicit bound for |f(1)|
LOG_C_WEIGHT = 3
EXP_WEIGHT = Fraction(791, 1000)
ABSOLUTE_TERM = Fraction(10720, 1000)
INVERSE_C_WEIGHT = Fraction(943, 1000)
NORMALIZING_PRIME = 500
COR33_DENOMINATOR = 39


def _ball(value: Any) -> BallReal:
    return BallReal(exact_real(value))


def _loglog(x: Any) -> BallReal:
    return _ball(x).log().log()


def _check_indicator(indicator: int) -> int:
    if indicator not in (0, 1):
        raise InvalidInputError(f"indicator must be 0 or 1, got {indicator}")
    return indicator


def _check_c(c: BallReal) -> None:
    if c.certainly_lt(ZERO_FREE_CONSTANT):
        raise DomainError(f"c must be at least {float(ZERO_FREE_CONSTANT)}, got {c.nstr(8)}")


def floor_log(nu: int) -> int:
    """floor(log nu) for an integer nu >= 1, certified."""
    if nu < 1:
        raise InvalidInputError(f"nu must be >= 1, got {nu}")
    k = int(log(nu))
    with working_precision(64):
        while iv.exp(iv.mpf(k + 1)) <= nu:
            k += 1
        while k > 0 and iv.exp(iv.mpf(k)) > nu:
            k -= 1
    return k


def right_endpoint(p: int, c: Any, multiple: Any = 1, prec: int = DEFAULT_PRECISION) -> BallReal:
    """1 + multiple/(c log p)."""
    with working_precision(prec + GUARD_BITS):
        value = 1 + _ball(multiple) / (_ball(c) * BallReal(p).log())
    value.precision = prec
    return value


def _c_p_nu(p: int, nu: int, sigma: BallReal, c: BallReal) -> BallReal:
    log_p = BallReal(p).log()
    base = c ** nu * factorial(nu - 1)
    k = floor_log(nu)
    first = BallReal(2).log() / (2 * base * log_p)
    second = (log_p.log() + c.log() - _loglog(2) + BallReal(-1).exp()) / base
    third = 1 / (c * log_p)
    fourth = sigma * Fraction(k, nu - k)
    fifth = sigma * nu / (c ** k * factorial(k))
    return first + second + third + fourth + fifth


def c_p_nu(p: int, nu: int, sigma: Any, c: Any, prec: int = DEFAULT_PRECISION) -> BallReal:
    """The constant c_{p,nu} of the derivative bound near s = 1."""
    if nu < 1:
        raise InvalidInputError(f"c_p_nu needs nu >= 1, got {nu}")
    with working_precision(prec + GUARD_BITS):
        value = _c_p_nu(p, nu, _ball(sigma), _ball(c))
    value.precision = prec
    return value


def lemma22_rhs(p: int, nu: int, sigma: Any, c: Any, indicator: int = 0, prec: int = DEFAULT_PRECISION) -> BallReal:
    """
    (1 + 1_beta) log(1/(sigma - 1)) + 3/2 for nu = 0, and
    (1 + 1_beta + c_{p,nu}) (nu - 1)! / (sigma - 1)^nu for nu >= 1,
    on 1 < sigma <= 1 + 1/(c log p).
    """
    _check_indicator(indicator)
    if nu < 0:
        raise InvalidInputError(f"nu must be >= 0, got {nu}")
    with working_precision(prec + GUARD_BITS):
        s = _ball(sigma)
        cb = _ball(c)
        upper = 1 + 1 / (cb * BallReal(p).log())
        if not s.certainly_gt(1) or s.certainly_gt(upper):
            raise DomainError(f"sigma = {s.nstr(10)} outside (1, {upper.nstr(10)}]")
        gap = s - 1
        if nu == 0:
            value = (1 + indicator) * (1 / gap).log() + Fraction(3, 2)
        else:
            value = (1 + indicator + _c_p_nu(p, nu, s, cb)) * factorial(nu - 1) / gap ** nu
    value.precision = prec
    return value


def lemma23_rhs(p: int, nu: int, c: Any, prec: int = DEFAULT_PRECISION) -> BallReal:
    """2 c^nu nu! p (log p)^(nu + 1)."""
    if nu < 0:
        raise InvalidInputError(f"nu must be >= 0, got {nu}")
    with working_precision(prec + GUARD_BITS):
        cb = _ball(c)
        _check_c(cb)
        log_p = BallReal(p).log()
        if not ((p - 1) / log_p).certainly_gt(cb):
            raise DomainError(f"(p - 1)/log p must exceed c for p={p}")
        value = 2 * cb ** nu * factorial(nu) * p * log_p ** (nu + 1)
    value.precision = prec
    return value


@dataclass
class SigmaNu:
    """sigma_nu with the explicit lower bound for sigma_nu - 1."""
    value: BallReal
    gap_lower_bound: BallReal


def sigma_nu_point(
    p: int,
    nu: int,
    c: Any,
    indicator: int = 0,
    sigma_for_c: Optional[Any] = None,
    prec: int = DEFAULT_PRECISION,
) -> SigmaNu:
    _check_indicator(indicator)
    if nu < 1:
        raise InvalidInputError(f"sigma_nu needs nu >= 1, got {nu}")
    with working_precision(prec + GUARD_BITS):
        cb = _ball(c)
        log_p = BallReal(p).log()
        scale = 1 / (cb * log_p)
        s = _ball(sigma_for_c) if sigma_for_c is not None else 1 + scale
        ratio = (1 + indicator + _c_p_nu(p, nu, s, cb)) / (2 * nu * p * log_p)
        gap = scale * (ratio.log() / nu).exp()
        lower = scale / ((BallReal(2 * nu * p) * log_p).log() / nu).exp()
        if gap.certainly_lt(lower):
            raise DomainError(f"sigma_nu - 1 fell below its lower bound for p={p}, nu={nu}")
        point = SigmaNu(value=1 + gap, gap_lower_bound=lower)
    point.value.precision = prec
    point.gap_lower_bound.precision = prec
    return point


def sigma_nu(
    p: int,
    nu: int,
    c: Any,
    indicator: int = 0,
    sigma_for_c: Optional[Any] = None,
    prec: int = DEFAULT_PRECISION,
) -> BallReal:
    """The point where the derivative bound meets the absolute bound."""
    return sigma_nu_point(p, nu, c, indicator, sigma_for_c, prec).value


def thm31_bound(p: int, c: Any, indicator: int = 0, prec: int = DEFAULT_PRECISION) -> BallReal:
    """
    (1 + 2 1_beta + e^(1/c)) loglog p + (3 + e^(1/c)) log c
    + 0.791 e^(1/c) + 10.720 + 0.943/c, for p > 500.
    """
    _check_indicator(indicator)
    if p <= NORMALIZING_PRIME:
        raise DomainError(f"the bound on |f(1)| needs p > {NORMALIZING_PRIME}, got {p}")
    with working_precision(prec + GUARD_BITS):
        cb = _ball(c)
        _check_c(cb)
        e_inv_c = (1 / cb).exp()
        value = (
            (1 + 2 * indicator + e_inv_c) * _loglog(p)
            + (LOG_C_WEIGHT + e_inv_c) * cb.log()
            + EXP_WEIGHT * e_inv_c
            + ABSOLUTE_TERM
            + INVERSE_C_WEIGHT / cb
        )
    value.precision = prec
    return value


def thm11_main_term(p: int, indicator: int = 0, prec: int = DEFAULT_PRECISION) -> BallReal:
    """(2 + 2 1_beta) loglog p, the leading term of the asymptotic bound."""
    _check_indicator(indicator)
    with working_precision(prec + GUARD_BITS):
        value = (2 + 2 * indicator) * _loglog(p)
    value.precision = prec
    return value


def default_c(p: int, prec: int = DEFAULT_PRECISION) -> BallReal:
    """6.4355 loglog p / loglog 500, which equals 6.4355 at p = 500."""
    if p < NORMALIZING_PRIME:
        raise DomainError(f"default c is defined for p >= {NORMALIZING_PRIME}, got {p}")
    with working_precision(prec + GUARD_BITS):
        if p == NORMALIZING_PRIME:
            value = BallReal(ZERO_FREE_CONSTANT)
        else:
            value = ZERO_FREE_CONSTANT * _loglog(p) / _loglog(NORMALIZING_PRIME)
    value.precision = prec
    return value


def cor33_rhs(p: int, prec: int = DEFAULT_PRECISION) -> BallReal:
    """((p - 1)/4) log(4 pi^2 / 39)."""
    with working_precision(prec + GUARD_BITS):
        value = Fraction(p - 1, 4) * (BallReal(4 * iv.pi ** 2) / COR33_DENOMINATOR).log()
    value.precision = prec
    return value


def cor33_direct_rhs(p: int, prec: int = DEFAULT_PRECISION) -> BallReal:
    """log(2p) + ((p - 1)/4) log(p / 39), the log of 2p (p/39)^((p - 1)/4)."""
    with working_precision(prec + GUARD_BITS):
        value = BallReal(2 * p).log() + Fraction(p - 1, 4) * (BallReal(Fraction(p, COR33_DENOMINATOR))).log()
    value.precision = prec
    return value


def taylor_worst_case_bound(p: int, c: Any, indicator: int, nu: int, prec: int = DEFAULT_PRECISION) -> BallReal:
    """
    (1 + 1_beta) log(1/(sigma_nu - 1)) + 3/2 + sum_{i=1}^{nu} (1 + 1_beta + c_{p,i})/i,
    with c_{p,i} taken at sigma_nu.
    """
    point = sigma_nu(p, nu, c, indicator, prec=prec)
    with working_precision(prec + GUARD_BITS):
        cb = _ball(c)
        value = (1 + indicator) * (1 / (point - 1)).log() + Fraction(3, 2)
        for i in range(1, nu + 1):
            value = value + (1 + indicator + _c_p_nu(p, i, point, cb)) / i
    value.precision = prec
    return value


def taylor_orders(p: int) -> range:
    """The orders nu = 1..ceil(2 log p) searched by best_taylor_bound."""
    return range(1, ceil(2 * log(p)) + 1)


def best_taylor_bound(p: int, c: Any, indicator: int = 0, prec: int = DEFAULT_PRECISION):
    """(nu, bound) minimizing the worst-case Taylor bound by upper endpoint."""
    best = None
    for nu in taylor_orders(p):
        bound = taylor_worst_case_bound(p, c, indicator, nu, prec)
        if best is None or bound.upper < best[1].upper:
            best = (nu, bound)
    return best


def log_zeta_majorant_rhs(sigma: Any, prec: int = DEFAULT_PRECISION) -> BallReal:
    """log(sigma/(sigma - 1)), which majorizes log zeta(sigma) for sigma > 1."""
    with working_precision(prec + GUARD_BITS):
        s = _ball(sigma)
        if not s.certainly_gt(1):
            raise DomainError(f"the majorant needs sigma > 1, got {s.nstr(10)}")
        value = (s / (s - 1)).log()
    value.precision = prec
    return value
