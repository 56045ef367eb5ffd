"""
Truncated Dirichlet series for the derivatives of log L(sigma, chi), sigma > 1.

(log L)^(k)(sigma, chi) = sum over prime powers n = q^m of
chi(n) (-log n)^k n^-sigma / m.
"""

from fractions import Fraction
from math import factorial, log
from typing import Any, List

from mpmath import iv

from ..arith.primes import SIEVE_LIMIT, prime_powers_up_to
from ..chars.models import Character
from ..chars.sums import fold_exponent_sums, root_table
from ..chars.table import build_table
from ..core.ball import DEFAULT_PRECISION, GUARD_BITS, BallComplex, BallReal, exact_real, working_precision
from ..core.exceptions import DomainError, InvalidInputError
from .models import SeriesEnclosure


def series_tail_bound(order: int, sigma: Any, truncation: int) -> BallReal:
    """
    Bound for sum_{n > X} (log n)^k n^-sigma, the integral of the decreasing majorant from X.
    """
    s = BallReal(sigma)
    x = BallReal(truncation)
    log_x = x.log()
    total = BallReal(0)
    for i in range(order + 1):
        total = total + Fraction(factorial(order), factorial(order - i)) * log_x ** (order - i) / (s - 1) ** (i + 1)
    return ((1 - s) * log_x).exp() * total


def dirichlet_log_series(
    chi: Character,
    sigma: Any,
    order: int,
    truncation: int,
    prec: int = DEFAULT_PRECISION,
) -> SeriesEnclosure:
    """Series values truncated at X with their tail bounds, k = 0..order."""
    sigma = exact_real(sigma)
    if not isinstance(sigma, Fraction):
        raise InvalidInputError("sigma must be an exact rational here")
    if sigma <= 1:
        raise DomainError(f"the Dirichlet series converges for sigma > 1 only, got {sigma}")
    if truncation > SIEVE_LIMIT:
        raise InvalidInputError(f"truncation above {SIEVE_LIMIT} is not supported")
    if truncation < 16 or log(truncation) < order / float(sigma):
        raise DomainError(f"truncation {truncation} is too small for order {order}")

    p = chi.p
    modulus = p - 1
    table = build_table(p)
    bits = prec + GUARD_BITS
    with working_precision(bits):
        s = iv.mpf(sigma.numerator) / sigma.denominator
        acc: List[List[Any]] = [[0] * modulus for _ in range(order + 1)]
        logs = {}
        for pp in prime_powers_up_to(truncation):
            k = table.index(pp.value)
            if k is None:
                continue
            e = chi.j * k % modulus
            if pp.q not in logs:
                logs[pp.q] = iv.ln(pp.q)
            log_n = pp.m * logs[pp.q]
            if sigma.denominator == 1:
                weight = iv.mpf(1) / (pp.m * pp.value ** int(sigma))
            else:
                weight = iv.exp(-s * log_n) / pp.m
            for row in acc:
                row[e] = row[e] + weight
                weight = weight * -log_n

        roots = root_table(modulus, bits)
        values = []
        for row in acc:
            re, im = fold_exponent_sums(row, roots)
            values.append(BallComplex(BallReal(re, prec), BallReal(im, prec)))
        tails = [series_tail_bound(k, sigma, truncation) for k in range(order + 1)]
    return SeriesEnclosure(values=values, tail_bounds=tails, truncation=truncation)
