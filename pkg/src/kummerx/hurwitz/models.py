"""
Parameters of the Euler-Maclaurin evaluation.
"""

from dataclasses import dataclass
from math import ceil

from ..core.exceptions import InvalidInputError


@dataclass(frozen=True)
class EulerMaclaurinParameters:
    """Direct-summation shift N and number M of Bernoulli correction terms."""
    shift: int
    depth: int

    def __post_init__(self):
        if self.shift < 1 or self.depth < 1:
            raise InvalidInputError(f"shift and depth must be positive, got {self.shift}, {self.depth}")

    @classmethod
    def for_precision(cls, prec: int) -> "EulerMaclaurinParameters":
        return cls(shift=max(32, ceil(0.35 * prec)), depth=ceil(0.2 * prec))
