"""
Certified Hurwitz zeta values and s-derivatives by Euler-Maclaurin summation.

With x = N + a,

    zeta(s, a) = sum_{n<N} (n+a)^-s + x^(1-s)/(s-1) + x^-s/2
                 + sum_{j=1}^{M} B_2j/(2j)! (s)_{2j-1} x^(-s-2j+1) + R.

Derivatives are taken term by term. The pole 1/(s-1) is split off so that the
regular part zeta(s, a) - 1/(s-1) is available at s = 1 too. The remainder
derivatives are bounded with Cauchy's estimate on a circle of radius 1/4
around s.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, List, Optional, Tuple

import mpmath
from mpmath import iv

from ..core.ball import GUARD_BITS, BallReal, to_interval, working_precision
from ..core.exceptions import DomainError, InvalidInputError, PoleError, PrecisionExhaustedError
from ..utils.logger import get_logger
from .models import EulerMaclaurinParameters

logger = get_logger(__name__)

MIN_PRECISION = 64
CAUCHY_RADIUS = Fraction(1, 4)


@lru_cache(maxsize=16)
def bernoulli_coefficients(depth: int) -> Tuple[Fraction, ...]:
    """B_2j / (2j)! for j = 1..depth, exactly."""
    out = []
    for j in range(1, depth + 1):
        num, den = mpmath.bernfrac(2 * j)
        out.append(Fraction(int(num), int(den) * factorial(2 * j)))
    return tuple(out)


def _lower(x: Any):
    return mpmath.mp.make_mpf(x._mpi_[0])


def _upper(x: Any):
    return mpmath.mp.make_mpf(x._mpi_[1])


def _times_linear(jet: List[Any], alpha: Any) -> List[Any]:
    """Truncated product of a Taylor jet in t with (alpha + t)."""
    out = [alpha * jet[0]]
    for i in range(1, len(jet)):
        out.append(alpha * jet[i] + jet[i - 1])
    return out


class HurwitzKernel:
    """
    Regular part of zeta(s, a) and its s-derivatives for one s and many shifts a.

    Must be constructed and used under the same working precision.
    """

    def __init__(self, s: Any, order: int, params: EulerMaclaurinParameters):
        if order < 0:
            raise InvalidInputError(f"derivative order must be >= 0, got {order}")
        self.s = to_interval(s)
        s_lo = _lower(self.s)
        if not s_lo > 0.75:
            raise DomainError(f"Hurwitz zeta is evaluated for real s > 0.75 only, got s >= {s_lo}")
        self.order = order
        self.params = params
        self.eps = mpmath.mp.ldexp(1, -(iv.prec + 8))

        # Taylor jets of B_2j/(2j)! * (s + t)_{2j-1}, truncated at degree `order`
        jet = ([self.s, iv.mpf(1)] + [iv.mpf(0)] * (order - 1))[: order + 1]
        self._jets = []
        for j, coefficient in enumerate(bernoulli_coefficients(params.depth), start=1):
            if j > 1:
                jet = _times_linear(jet, self.s + (2 * j - 3))
                jet = _times_linear(jet, self.s + (2 * j - 2))
            c = to_interval(coefficient)
            self._jets.append([c * v for v in jet])

        # Remainder: 4 |(z)_2M| / (2 pi)^2M * x^(1 - Re z - 2M) / (Re z + 2M - 1) on |z - s| = rho
        rho = to_interval(CAUCHY_RADIUS)
        s_hi = self.s.b
        s_low = self.s.a
        two_m = 2 * params.depth
        rising = iv.mpf(1)
        for r in range(two_m):
            rising *= s_hi + rho + r
        self._rem_const = 4 * rising / (2 * iv.pi) ** two_m / (s_low - rho + two_m - 1)
        self._rem_exponent = 1 - (s_low - rho) - two_m
        self._rem_factors = [factorial(k) * 4 ** k for k in range(order + 1)]

    def remainder_bounds(self, log_x: Any) -> List[Any]:
        """Upper bounds for |R^(k)|, k = 0..order, as interval upper endpoints."""
        base = self._rem_const * iv.exp(self._rem_exponent * log_x)
        return [_upper(f * base) for f in self._rem_factors]

    def _regular_tail(self, x: Any, log_x: Any, x_neg_s: Any) -> List[Any]:
        """Derivatives of (x^(1-s) - 1)/(s - 1) with respect to s."""
        K = self.order
        u = self.s - 1
        neg_log = -log_x
        if mpmath.mp.fmul(_upper(abs(u)), _upper(log_x), rounding="c") <= 0.5:
            out = []
            for k in range(K + 1):
                n = k + 1
                term = neg_log ** n / n
                total = term
                while True:
                    term = term * neg_log * u * n / ((n + 1) * (n - k))
                    n += 1
                    total += term
                    mag = _upper(abs(term))
                    if mag < self.eps:
                        total += iv.mpf((-mag, mag))
                        break
                out.append(total)
            return out

        x_neg_u = x * x_neg_s
        inv_u = 1 / u
        inv_u_powers = [inv_u]
        for _ in range(K):
            inv_u_powers.append(inv_u_powers[-1] * inv_u)
        neg_log_powers = [iv.mpf(1)]
        for _ in range(K):
            neg_log_powers.append(neg_log_powers[-1] * neg_log)
        out = []
        for k in range(K + 1):
            total = iv.mpf(0)
            for i in range(k + 1):
                total += comb(k, i) * (-1) ** i * factorial(i) * neg_log_powers[k - i] * inv_u_powers[i]
            total = total * x_neg_u - (-1) ** k * factorial(k) * inv_u_powers[k]
            out.append(total)
        return out

    def regular(self, a: Any) -> List[Any]:
        """[d^k/ds^k (zeta(s, a) - 1/(s - 1))] for k = 0..order, as intervals."""
        K = self.order
        N = self.params.shift
        a = to_interval(a)
        s = self.s

        totals = [iv.mpf(0) for _ in range(K + 1)]
        for n in range(N):
            log_n = iv.ln(n + a)
            neg_log = -log_n
            term = iv.exp(-s * log_n)
            totals[0] += term
            for k in range(1, K + 1):
                term = term * neg_log
                totals[k] += term

        x = N + a
        log_x = iv.ln(x)
        neg_log = -log_x
        x_neg_s = iv.exp(-s * log_x)

        tail = self._regular_tail(x, log_x, x_neg_s)

        # Taylor coefficients of x^-(s+t): x^-s (-log x)^l / l!
        expo = [iv.mpf(1)]
        for l in range(1, K + 1):
            expo.append(expo[-1] * neg_log / l)

        weighted = [iv.mpf(0) for _ in range(K + 1)]
        power = x_neg_s / x
        inv_x2 = 1 / (x * x)
        for jet in self._jets:
            for i in range(K + 1):
                weighted[i] += power * jet[i]
            power = power * inv_x2

        remainders = self.remainder_bounds(log_x)
        out = []
        neg_log_k = iv.mpf(1)
        for k in range(K + 1):
            taylor = iv.mpf(0)
            for i in range(k + 1):
                taylor += weighted[i] * expo[k - i]
            value = totals[k] + tail[k] + x_neg_s * neg_log_k / 2 + factorial(k) * taylor
            r = remainders[k]
            out.append(value + iv.mpf((-r, r)))
            neg_log_k = neg_log_k * neg_log
        return out

    def check_remainder(self, prec: int) -> None:
        """Refuse parameters whose remainder cannot reach the requested accuracy."""
        worst = self.remainder_bounds(iv.ln(iv.mpf(self.params.shift)))[0]
        if not mpmath.mp.isfinite(worst) or worst > mpmath.mp.ldexp(1, -(prec // 4)):
            raise PrecisionExhaustedError(
                f"Euler-Maclaurin remainder too large at {prec} bits "
                f"(shift={self.params.shift}, depth={self.params.depth})"
            )


def _check_args(a: Any, order: int, prec: int) -> Fraction:
    if prec < MIN_PRECISION:
        raise InvalidInputError(f"precision must be at least {MIN_PRECISION} bits, got {prec}")
    if not isinstance(order, int) or order < 0:
        raise InvalidInputError(f"derivative order must be a non-negative integer, got {order}")
    a = Fraction(a)
    if a <= 0:
        raise InvalidInputError(f"Hurwitz shift a must be positive, got {a}")
    return a


def hurwitz_zeta_regular_derivs(
    s: Any,
    a: Any,
    order: int,
    prec: int,
    params: Optional[EulerMaclaurinParameters] = None,
) -> List[BallReal]:
    """
    Derivatives of zeta(s, a) - 1/(s - 1) in s, k = 0..order.

    Valid at s = 1.
    """
    a = _check_args(a, order, prec)
    params = params or EulerMaclaurinParameters.for_precision(prec)
    with working_precision(prec + GUARD_BITS):
        kernel = HurwitzKernel(s, order, params)
        kernel.check_remainder(prec)
        values = kernel.regular(to_interval(a))
        return [BallReal(v, precision=prec) for v in values]


def hurwitz_zeta_derivs(
    s: Any,
    a: Any,
    order: int,
    prec: int,
    params: Optional[EulerMaclaurinParameters] = None,
) -> List[BallReal]:
    """Derivatives of the Hurwitz zeta function zeta(s, a) in s, k = 0..order."""
    a = _check_args(a, order, prec)
    with working_precision(prec + GUARD_BITS):
        shifted = BallReal(s) - 1
        if shifted.contains_zero():
            raise PoleError("Hurwitz zeta has a pole at s = 1")
    regular = hurwitz_zeta_regular_derivs(s, a, order, prec, params)
    with working_precision(prec + GUARD_BITS):
        inv = 1 / shifted
        out = []
        pole = inv
        for k, value in enumerate(regular):
            out.append(BallReal(value + (-1) ** k * factorial(k) * pole, precision=prec))
            pole = pole * inv
    return out
