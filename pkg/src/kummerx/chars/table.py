"""
Discrete-log tables and character evaluation.
"""

from functools import lru_cache
from typing import List, Optional, Tuple

from ..arith.primes import primitive_root, require_odd_prime
from ..core.ball import GUARD_BITS, BallComplex, working_precision
from ..core.exceptions import InvalidInputError
from .models import Character, CharacterTable


@lru_cache(maxsize=64)
def build_table(p: int) -> CharacterTable:
    p = require_odd_prime(p)
    g = primitive_root(p)
    powers = [1] * (p - 1)
    for k in range(1, p - 1):
        powers[k] = powers[k - 1] * g % p
    logs = [-1] * p
    for k, n in enumerate(powers):
        logs[n] = k
    return CharacterTable(p=p, g=g, powers=tuple(powers), logs=tuple(logs))


def character(p: int, j: int) -> Character:
    p = require_odd_prime(p)
    if not 0 <= j < p - 1:
        raise InvalidInputError(f"character index must lie in [0, {p - 2}], got {j}")
    return Character(p, j)


def character_value(chi: Character, n: int, prec: int) -> Tuple[BallComplex, Optional[int]]:
    """chi(n) as a ball together with its exact exponent (None when p | n)."""
    e = build_table(chi.p).exponent(chi, n)
    if e is None:
        return BallComplex(0, 0), None
    with working_precision(prec + GUARD_BITS):
        return BallComplex.unit_root(e, chi.p - 1), e


def odd_characters(p: int) -> List[Character]:
    p = require_odd_prime(p)
    return [Character(p, j) for j in range(1, p - 1, 2)]


def quadratic_character(p: int) -> Character:
    p = require_odd_prime(p)
    return Character(p, (p - 1) // 2)


def legendre(n: int, p: int) -> int:
    """Legendre symbol by Euler's criterion."""
    r = pow(n % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r
