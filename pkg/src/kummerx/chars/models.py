"""
Data models for Dirichlet characters modulo an odd prime.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple


class Parity(str, Enum):
    """Value of the character at -1."""
    ODD = "odd"
    EVEN = "even"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Character:
    """
    The character g^k -> exp(2 pi i j k / (p - 1)), g the least primitive root mod p.
    """
    p: int
    j: int

    @property
    def order_modulus(self) -> int:
        return self.p - 1

    @property
    def parity(self) -> Parity:
        return Parity.ODD if self.j % 2 else Parity.EVEN

    @property
    def is_principal(self) -> bool:
        return self.j == 0

    @property
    def is_quadratic(self) -> bool:
        return 2 * self.j == self.p - 1

    @property
    def conjugate_index(self) -> int:
        return (-self.j) % (self.p - 1)

    def conjugate(self) -> "Character":
        return Character(self.p, self.conjugate_index)

    @property
    def is_self_conjugate(self) -> bool:
        return self.conjugate_index == self.j

    def __str__(self) -> str:
        return f"chi_{self.j} mod {self.p} ({self.parity})"


@dataclass(frozen=True)
class CharacterTable:
    """Discrete logarithms with respect to the least primitive root g."""
    p: int
    g: int
    powers: Tuple[int, ...]   # powers[k] = g^k mod p, k in [0, p - 2]
    logs: Tuple[int, ...]     # logs[n] = k with g^k = n, n in [1, p - 1]; logs[0] unused

    def index(self, n: int) -> Optional[int]:
        """Discrete log of n, or None when p divides n."""
        r = n % self.p
        if r == 0:
            return None
        return self.logs[r]

    def exponent(self, character: Character, n: int) -> Optional[int]:
        """The exact exponent j*k mod (p - 1) of character(n), None when p divides n."""
        k = self.index(n)
        if k is None:
            return None
        return (character.j * k) % (self.p - 1)

    def as_dict(self) -> Dict[int, int]:
        return {self.powers[k]: k for k in range(self.p - 1)}
