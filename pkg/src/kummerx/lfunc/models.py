"""
Data models for L-function quantities.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from ..core.ball import BallReal, describe

# Width constant of the zero-free region 1 - 1/(c log p) taken as input.
ZERO_FREE_CONSTANT = Fraction(64355, 10000)

SIEGEL_ASSUMPTION = (
    "the region [1 - 1/(c log p), 1] holds at most one zero of the quadratic "
    "L-function, real and simple"
)


class SiegelMethod(str, Enum):
    """How presence or absence of an exceptional zero was decided."""
    NOT_QUADRATIC = "not-quadratic"
    ENDPOINT_POSITIVITY = "endpoint-positivity"
    BISECTION = "bisection"

    def __str__(self) -> str:
        return self.value


@dataclass
class SiegelZeroReport:
    """Outcome of the exceptional-zero scan for one prime."""
    p: int
    present: bool
    c: Any
    method: SiegelMethod
    certified: bool
    interval_lower: BallReal
    beta: Optional[BallReal] = None
    endpoint_value: Optional[BallReal] = None
    precision_bits: int = 0
    assumption: str = SIEGEL_ASSUMPTION

    @property
    def indicator(self) -> int:
        """1 when an exceptional zero is present, else 0."""
        return 1 if self.present else 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "present": self.present,
            "c": describe(self.c),
            "method": self.method.value,
            "certified": self.certified,
            "interval": [self.interval_lower.to_dict(), "1"],
            "beta": self.beta.to_dict() if self.beta is not None else None,
            "endpoint_value": self.endpoint_value.to_dict() if self.endpoint_value is not None else None,
            "precision_bits": self.precision_bits,
            "assumption": self.assumption,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SiegelZeroReport":
        return cls(
            p=int(data["p"]),
            present=bool(data["present"]),
            c=Fraction(data["c"]),
            method=SiegelMethod(data["method"]),
            certified=bool(data["certified"]),
            interval_lower=BallReal.from_dict(data["interval"][0]),
            beta=BallReal.from_dict(data["beta"]) if data.get("beta") else None,
            endpoint_value=BallReal.from_dict(data["endpoint_value"]) if data.get("endpoint_value") else None,
            precision_bits=int(data.get("precision_bits", 0)),
            assumption=data.get("assumption", SIEGEL_ASSUMPTION),
        )


@dataclass
class FValue:
    """f^(nu)(sigma) = sum over odd chi of (log L)^(nu)(sigma, chi), minus the exceptional-zero term."""
    p: int
    order: int
    sigma: BallReal
    value: BallReal
    siegel: SiegelZeroReport
    c: Any = ZERO_FREE_CONSTANT

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "order": self.order,
            "sigma": self.sigma.to_dict(),
            "value": self.value.to_dict(),
            "c": describe(self.c),
            "siegel_present": self.siegel.present,
        }


@dataclass
class Eq2Residual:
    """Both sides of the prime-power identity for sum over odd chi of Log L(sigma, chi)."""
    p: int
    sigma: Fraction
    truncation: int
    lhs: BallReal
    truncated: BallReal
    tail_bound: BallReal
    stated_tail: BallReal
    residual: BallReal
    terms: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "sigma": str(self.sigma),
            "truncation": str(self.truncation),
            "lhs": self.lhs.to_dict(),
            "truncated": self.truncated.to_dict(),
            "tail_bound": self.tail_bound.to_dict(),
            "stated_tail": self.stated_tail.to_dict(),
            "residual": self.residual.to_dict(),
            "terms": self.terms,
        }


@dataclass
class SeriesEnclosure:
    """Truncated prime-power series for (log L)^(k), with a bound on every tail."""
    values: List[Any]
    tail_bounds: List[BallReal] = field(default_factory=list)
    truncation: int = 0
