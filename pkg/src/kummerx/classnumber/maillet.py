"""
The Maillet determinant: an exact, integer-only route to h_p^-.

D_p = det(R(a b^-1 mod p)), 1 <= a, b <= (p - 1)/2, with R the least positive
residue, satisfies |D_p| = p^((p - 3)/2) h_p^-.
"""

from typing import List

import gmpy2

from ..arith.primes import require_odd_prime
from ..core.exceptions import InternalError
from ..utils.logger import get_logger

logger = get_logger(__name__)


def maillet_matrix(p: int) -> List[List[int]]:
    p = require_odd_prime(p)
    half = (p - 1) // 2
    inverses = [0] + [pow(b, -1, p) for b in range(1, half + 1)]
    return [[a * inverses[b] % p for b in range(1, half + 1)] for a in range(1, half + 1)]


def bareiss_determinant(matrix: List[List[int]]) -> int:
    """Determinant by fraction-free elimination; every division is exact."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [[gmpy2.mpz(v) for v in row] for row in matrix]
    sign = 1
    previous = gmpy2.mpz(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pivot_value = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot_value - lead * row_k[j]) // previous
            row_i[k] = gmpy2.mpz(0)
        previous = pivot_value
    return int(sign * m[n - 1][n - 1])


def maillet_determinant(p: int) -> int:
    return bareiss_determinant(maillet_matrix(p))


def maillet_hminus(p: int) -> int:
    """h_p^- = |D_p| / p^((p - 3)/2), with exact divisibility asserted."""
    p = require_odd_prime(p)
    det = maillet_determinant(p)
    scale = p ** ((p - 3) // 2)
    h, rest = divmod(abs(det), scale)
    if rest != 0 or h < 1:
        raise InternalError(f"Maillet determinant {det} for p={p} is not a positive multiple of p^{(p - 3) // 2}")
    logger.debug(f"p={p}: Maillet determinant has {len(str(abs(det)))} digits")
    return h
