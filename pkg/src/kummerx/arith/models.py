"""
Data models for prime-power enumeration.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict


@dataclass(frozen=True)
class PrimePower:
    """n = q**m with q prime and m >= 1."""
    q: int
    m: int
    value: int

    @property
    def weight(self) -> Fraction:
        """The logarithmic weight 1/(m * q**m)."""
        return Fraction(1, self.m * self.value)


@dataclass(frozen=True)
class PiSum:
    """Exact value of the sum of 1/(m q^m) over prime powers in a class below x."""
    p: int
    a: int
    x: Fraction
    value: Fraction
    terms: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "a": self.a,
            "x": str(self.x),
            "value": f"{self.value.numerator}/{self.value.denominator}",
            "terms": self.terms,
        }
