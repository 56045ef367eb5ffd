"""
Generalized Bernoulli numbers B_{1,chi} = (1/p) sum_a a chi(a).
"""

from typing import Any, Tuple

from ..chars.models import Character, Parity
from ..chars.sums import character_sum, root_table
from ..chars.table import build_table
from ..core.ball import DEFAULT_PRECISION, GUARD_BITS, BallComplex, BallReal, to_interval, working_precision
from ..core.exceptions import InvalidInputError


def b1_sum(chi: Character, bits: int) -> Tuple[Any, Any]:
    """sum_a a chi(a) as (real, imaginary) intervals at the current precision."""
    table = build_table(chi.p)
    re, im = character_sum(chi.j, table.powers, root_table(chi.p - 1, bits))
    return to_interval(re), to_interval(im)


def b1_chi(chi: Character, prec: int = DEFAULT_PRECISION) -> BallComplex:
    if chi.parity is not Parity.ODD:
        raise InvalidInputError(f"B_1 is used for odd characters only, got {chi}")
    bits = prec + GUARD_BITS
    with working_precision(bits):
        re, im = b1_sum(chi, bits)
        return BallComplex(BallReal(re / chi.p, prec), BallReal(im / chi.p, prec))


def b1_norm(chi: Character, prec: int = DEFAULT_PRECISION) -> BallReal:
    """B_{1,chi} * B_{1,conj chi} = |B_{1,chi}|^2, real and positive."""
    value = b1_chi(chi, prec)
    with working_precision(prec + GUARD_BITS):
        return (value * value.conjugate()).real_widened()
