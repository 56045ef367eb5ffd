"""
Data models for relative class numbers.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from ..core.ball import BallReal


class HminusMethod(str, Enum):
    """How h_p^- was obtained."""
    ANALYTIC = "analytic"
    MAILLET = "maillet"
    BOTH = "both"

    def __str__(self) -> str:
        return self.value


@dataclass
class RelativeClassNumberRecord:
    """Exact h_p^- with log G(p) and the Kummer log-ratio."""
    p: int
    h_minus: int
    log_G: BallReal
    log_ratio: BallReal
    method: HminusMethod
    precision_bits: int
    certified: bool
    integrality_gap: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "h_minus": str(self.h_minus),
            "log_G": self.log_G.to_dict(),
            "log_ratio": self.log_ratio.to_dict(),
            "method": self.method.value,
            "precision_bits": self.precision_bits,
            "certified": self.certified,
            "integrality_gap": self.integrality_gap,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RelativeClassNumberRecord":
        return cls(
            p=int(data["p"]),
            h_minus=int(data["h_minus"]),
            log_G=BallReal.from_dict(data["log_G"]),
            log_ratio=BallReal.from_dict(data["log_ratio"]),
            method=HminusMethod(data["method"]),
            precision_bits=int(data["precision_bits"]),
            certified=bool(data["certified"]),
            integrality_gap=data.get("integrality_gap"),
        )
