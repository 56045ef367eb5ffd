"""
Dirichlet L-functions modulo p and their s-derivatives through Hurwitz zeta.

For a non-principal chi the pole of every zeta(s, a/p) cancels in
sum_a chi(a) zeta(s, a/p), so only the regular parts are summed and L(1, chi)
is evaluated directly.
"""

from math import comb
from typing import Any, List, Optional

from mpmath import iv

from ..arith.primes import require_odd_prime
from ..chars.models import Character
from ..chars.sums import character_sum, root_table
from ..chars.table import build_table
from ..core.ball import GUARD_BITS, BallComplex, BallReal, working_precision
from ..core.exceptions import CannotDivideError, InvalidInputError
from ..hurwitz.euler_maclaurin import HurwitzKernel
from ..hurwitz.models import EulerMaclaurinParameters
from ..utils.logger import get_logger

logger = get_logger(__name__)


class LFunctionBank:
    """
    Hurwitz data shared by all characters modulo p at one real point s.

    L^(k)(s, chi) = sum_i C(k, i) (-log p)^(k-i) p^-s S_i(chi) with
    S_i(chi) = sum_a chi(a) d^i/ds^i zeta_reg(s, a/p).
    """

    def __init__(
        self,
        p: int,
        s: Any,
        order: int,
        prec: int,
        params: Optional[EulerMaclaurinParameters] = None,
    ):
        self.p = require_odd_prime(p)
        self.order = order
        self.prec = prec
        self.bits = prec + GUARD_BITS
        self.table = build_table(self.p)
        params = params or EulerMaclaurinParameters.for_precision(prec)

        with working_precision(self.bits):
            self.s = BallReal(s)
            kernel = HurwitzKernel(self.s.interval, order, params)
            kernel.check_remainder(prec)
            columns = [kernel.regular(iv.mpf(a) / self.p) for a in self.table.powers]
            # derivs[i][t] = d^i zeta_reg(s, g^t / p)
            self._derivs = [[column[i] for column in columns] for i in range(order + 1)]

            log_p = iv.ln(self.p)
            p_neg_s = iv.exp(-self.s.interval * log_p)
            neg_log_powers = [iv.mpf(1)]
            for _ in range(order):
                neg_log_powers.append(neg_log_powers[-1] * -log_p)
            self._weights = [
                [comb(k, i) * neg_log_powers[k - i] * p_neg_s for i in range(k + 1)]
                for k in range(order + 1)
            ]
            self.roots = root_table(self.p - 1, self.bits)

        logger.debug(f"Hurwitz bank for p={self.p} at s={self.s.nstr(8)}: order {order}, {prec} bits")

    def l_derivs(self, chi: Character) -> List[BallComplex]:
        """[L^(k)(s, chi)] for k = 0..order."""
        if chi.p != self.p:
            raise InvalidInputError(f"character modulo {chi.p} used with a bank modulo {self.p}")
        if chi.is_principal:
            raise InvalidInputError("the principal character is not supported")
        with working_precision(self.bits):
            sums = [character_sum(chi.j, self._derivs[i], self.roots) for i in range(self.order + 1)]
            out = []
            for weights in self._weights:
                re = iv.mpf(0)
                im = iv.mpf(0)
                for w, (s_re, s_im) in zip(weights, sums):
                    re += w * s_re
                    im += w * s_im
                out.append(BallComplex(BallReal(re, self.prec), BallReal(im, self.prec)))
            return out

    def log_l_derivs(self, chi: Character) -> List[BallComplex]:
        return log_derivs_from_derivs(self.l_derivs(chi), self.bits)

    def odd_log_sums(self) -> List[BallReal]:
        """
        sum over odd chi of (log L)^(k)(s, chi), k = 0..order, with Log principal.

        Conjugate pairs contribute twice their real part; the self-conjugate
        character (p = 3 mod 4) contributes its real part widened by the
        imaginary width.
        """
        half = (self.p - 1) // 2
        totals = [BallReal(0, self.prec) for _ in range(self.order + 1)]
        for j in range(1, half + 1, 2):
            logs = self.log_l_derivs(Character(self.p, j))
            with working_precision(self.bits):
                for k, value in enumerate(logs):
                    if j == half:
                        totals[k] = totals[k] + value.real_widened()
                    else:
                        totals[k] = totals[k] + 2 * value.re
        for total in totals:
            total.precision = self.prec
        return totals


def log_derivs_from_derivs(values: List[BallComplex], bits: Optional[int] = None) -> List[BallComplex]:
    """
    Derivatives of Log F from those of F.

    Solves F^(n) = sum_{k<n} C(n-1, k) (log F)^(n-k) F^(k) for (log F)^(n).
    """
    head = values[0]
    if head.contains_zero():
        raise CannotDivideError("L-value enclosure contains zero")
    with working_precision(bits or head.precision + GUARD_BITS):
        out = [head.log()]
        for n in range(1, len(values)):
            acc = values[n]
            for k in range(1, n):
                acc = acc - comb(n - 1, k) * (out[n - k] * values[k])
            out.append(acc / head)
    return out


def l_value_derivs(
    chi: Character,
    s: Any,
    order: int,
    prec: int,
    params: Optional[EulerMaclaurinParameters] = None,
) -> List[BallComplex]:
    """Certified [L^(k)(s, chi)], k = 0..order, for a non-principal chi."""
    if chi.is_principal:
        raise InvalidInputError("the principal character is not supported")
    return LFunctionBank(chi.p, s, order, prec, params).l_derivs(chi)


def log_l_derivs(
    chi: Character,
    sigma: Any,
    order: int,
    prec: int,
    params: Optional[EulerMaclaurinParameters] = None,
) -> List[BallComplex]:
    """Certified [(log L)^(k)(sigma, chi)], k = 0..order; Log is the principal branch."""
    return log_derivs_from_derivs(l_value_derivs(chi, sigma, order, prec, params), prec + GUARD_BITS)
