"""
Character sums with exact exponent bookkeeping.

A sum of chi_j(a) * v(a) over the units is grouped by the exact exponent
j*t mod (p - 1) of chi_j(g^t) before any root of unity is touched; the grouped
sums are then folded against cos and sin tables over a quarter period only.
"""

from functools import lru_cache
from math import gcd
from typing import Any, List, Sequence, Tuple

from mpmath import iv

from ..core.ball import working_precision


class RootTable:
    """cos and sin of 2 pi m / modulus for 0 <= m < modulus / 4, as intervals."""

    def __init__(self, modulus: int):
        self.modulus = modulus
        half = modulus // 2
        count = (half + 1) // 2
        step = 2 * iv.pi / modulus
        self.cos = [iv.mpf(1)] + [iv.cos(step * m) for m in range(1, count)]
        self.sin = [iv.mpf(0)] + [iv.sin(step * m) for m in range(1, count)]


@lru_cache(maxsize=32)
def root_table(modulus: int, bits: int) -> RootTable:
    with working_precision(bits):
        return RootTable(modulus)


def accumulate_by_exponent(j: int, values: Sequence[Any], modulus: int) -> List[Any]:
    """Group values[t] (the weight at g^t) by the exponent j*t mod modulus."""
    acc: List[Any] = [0] * modulus
    if gcd(j, modulus) == 1:
        for t, v in enumerate(values):
            acc[j * t % modulus] = v
    else:
        for t, v in enumerate(values):
            acc[j * t % modulus] += v
    return acc


def _nonzero(value: Any) -> bool:
    return not (isinstance(value, int) and value == 0)


def fold_exponent_sums(acc: Sequence[Any], roots: RootTable) -> Tuple[Any, Any]:
    """Real and imaginary parts of sum_e acc[e] * exp(2 pi i e / modulus)."""
    modulus = len(acc)
    half = modulus // 2
    b = [acc[m] - acc[m + half] for m in range(half)]
    re: Any = b[0]
    im: Any = 0
    for m in range(1, (half + 1) // 2):
        diff = b[m] - b[half - m]
        both = b[m] + b[half - m]
        if _nonzero(diff):
            re = re + diff * roots.cos[m]
        if _nonzero(both):
            im = im + both * roots.sin[m]
    if half % 2 == 0:
        im = im + b[half // 2]
    return re, im


def character_sum(j: int, values: Sequence[Any], roots: RootTable) -> Tuple[Any, Any]:
    """sum_t chi_j(g^t) * values[t], returned as (real, imaginary)."""
    return fold_exponent_sums(accumulate_by_exponent(j, values, roots.modulus), roots)
