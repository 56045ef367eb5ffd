"""
The congruence sum over prime powers and the Brun-Titchmarsh type bound.
"""

from fractions import Fraction
from typing import Sequence, Union

from ..core.ball import DEFAULT_PRECISION, GUARD_BITS, BallReal, working_precision
from ..core.exceptions import DomainError, InvalidInputError
from .models import PiSum
from .primes import prime_powers_in_class, require_odd_prime

Real = Union[int, float, Fraction]


def _tree_sum(values: Sequence[Fraction]) -> Fraction:
    """Pairwise sum; keeps intermediate denominators balanced."""
    if not values:
        return Fraction(0)
    layer = list(values)
    while len(layer) > 1:
        paired = [layer[i] + layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            paired.append(layer[-1])
        layer = paired
    return layer[0]


def pi_sum(p: int, a: int, x: Real) -> PiSum:
    """Exact sum of 1/(m q^m) over prime powers q^m <= x with q^m = a (mod p)."""
    powers = prime_powers_in_class(p, a, x)
    value = _tree_sum([pp.weight for pp in powers])
    return PiSum(p=p, a=a, x=Fraction(x), value=value, terms=len(powers))


def _check_cutoff(p: int, x: Real) -> None:
    require_odd_prime(p)
    if Fraction(x) <= p:
        raise DomainError(f"the bound needs x > p, got x={x} for p={p}")


def bt_bound(p: int, x: Real, prec: int = DEFAULT_PRECISION) -> BallReal:
    """2x / ((p - 1) log(x / p)) for x > p."""
    _check_cutoff(p, x)
    with working_precision(prec + GUARD_BITS):
        xb = BallReal(Fraction(x))
        return 2 * xb / ((p - 1) * (xb / p).log())


def bt_bound_mv(p: int, x: Real, prec: int = DEFAULT_PRECISION) -> BallReal:
    """The sharper form 2x / ((p - 1)(log(x / p) + 5/6)); reported, never verified."""
    _check_cutoff(p, x)
    with working_precision(prec + GUARD_BITS):
        xb = BallReal(Fraction(x))
        return 2 * xb / ((p - 1) * ((xb / p).log() + Fraction(5, 6)))


def pi_sum_within_bound(pi: PiSum, prec: int = DEFAULT_PRECISION) -> bool:
    """True when the exact sum is certainly at most bt_bound(p, x)."""
    if pi.a not in (1, -1):
        raise InvalidInputError(f"residue class must be +1 or -1, got {pi.a}")
    bound = bt_bound(pi.p, pi.x, prec)
    with working_precision(prec + GUARD_BITS):
        return BallReal(pi.value).certainly_le(bound)
