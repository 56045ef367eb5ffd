"""
Primes, prime powers in residue classes and the congruence sum.
"""

from .models import PiSum, PrimePower
from .pisum import bt_bound, bt_bound_mv, pi_sum, pi_sum_within_bound
from .primes import (
    SIEVE_LIMIT,
    coprime_pairs_below_square,
    is_prime,
    prime_factors,
    prime_powers_in_class,
    prime_powers_up_to,
    primes_up_to,
    primitive_root,
    require_odd_prime,
    sieve_primes,
)

__all__ = [
    "PiSum",
    "PrimePower",
    "SIEVE_LIMIT",
    "bt_bound",
    "bt_bound_mv",
    "coprime_pairs_below_square",
    "is_prime",
    "pi_sum",
    "pi_sum_within_bound",
    "prime_factors",
    "prime_powers_in_class",
    "prime_powers_up_to",
    "primes_up_to",
    "primitive_root",
    "require_odd_prime",
    "sieve_primes",
]
