"""
Prime sieving, primitive roots and prime powers in residue classes.
"""

from fractions import Fraction
from functools import lru_cache
from math import floor, isqrt
from typing import List, Tuple, Union

import numpy as np

from ..core.exceptions import InvalidInputError
from .models import PrimePower

Real = Union[int, float, Fraction]

# The largest sieve kept in memory; the truncation point of the prime-power
# identity defaults to this value.
SIEVE_LIMIT = 10_000_000


@lru_cache(maxsize=4)
def _sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for q in range(3, isqrt(limit) + 1, 2):
        if flags[q]:
            flags[q * q::2 * q] = False
    primes = np.flatnonzero(flags).astype(np.int64)
    primes.setflags(write=False)
    return primes


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit as a read-only int64 array."""
    if limit > SIEVE_LIMIT * 10:
        raise InvalidInputError(f"sieve limit {limit} is too large")
    return _sieve(int(limit))


def sieve_primes(limit: int) -> List[int]:
    """Ascending list of the primes <= limit; empty below 2."""
    if limit < 2:
        return []
    return primes_up_to(int(limit)).tolist()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def require_odd_prime(p: int) -> int:
    """Validate that ``p`` is an odd prime and return it."""
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
        raise InvalidInputError(f"p must be an integer, got {p!r}")
    p = int(p)
    if p < 3 or not is_prime(p):
        raise InvalidInputError(f"p must be an odd prime, got {p}")
    return p


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors of n in increasing order."""
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


@lru_cache(maxsize=256)
def primitive_root(p: int) -> int:
    """The least primitive root modulo the odd prime p."""
    require_odd_prime(p)
    exponents = [(p - 1) // q for q in prime_factors(p - 1)]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in exponents):
            return g
    raise InvalidInputError(f"no primitive root modulo {p}")


def _floor_real(x: Real) -> int:
    return floor(Fraction(x))


def _prime_powers(limit: int) -> List[PrimePower]:
    primes = primes_up_to(limit)
    out = [PrimePower(int(q), 1, int(q)) for q in primes]
    for q in primes[: np.searchsorted(primes, isqrt(limit), side="right")]:
        q = int(q)
        m, v = 2, q * q
        while v <= limit:
            out.append(PrimePower(q, m, v))
            m += 1
            v *= q
    out.sort(key=lambda pp: pp.value)
    return out


def prime_powers_up_to(x: Real) -> List[PrimePower]:
    """Every prime power q**m <= x, sorted by value."""
    if x < 2:
        raise InvalidInputError(f"x must be at least 2, got {x}")
    return _prime_powers(_floor_real(x))


def prime_powers_in_class(p: int, a: int, x: Real) -> List[PrimePower]:
    """Prime powers q**m <= x with q**m = a (mod p), sorted by value."""
    p = require_odd_prime(p)
    if a not in (1, -1):
        raise InvalidInputError(f"residue class must be +1 or -1, got {a}")
    if x < 2:
        raise InvalidInputError(f"x must be at least 2, got {x}")
    limit = _floor_real(x)
    target = a % p

    primes = primes_up_to(limit)
    hits = primes[primes % p == target]
    out = [PrimePower(int(q), 1, int(q)) for q in hits]
    for q in primes[: np.searchsorted(primes, isqrt(limit), side="right")]:
        q = int(q)
        m, v = 2, q * q
        while v <= limit:
            if v % p == target:
                out.append(PrimePower(q, m, v))
            m += 1
            v *= q
    out.sort(key=lambda pp: pp.value)
    return out


def coprime_pairs_below_square(p: int, a: int) -> List[Tuple[int, int]]:
    """
    Pairs of distinct prime powers in the class a mod p below p**2 that share a prime.

    The list is empty for every p >= 5.
    """
    powers = prime_powers_in_class(p, a, p * p - 1)
    offending = []
    for i, first in enumerate(powers):
        for second in powers[i + 1:]:
            if first.q == second.q:
                offending.append((first.value, second.value))
    return offending
