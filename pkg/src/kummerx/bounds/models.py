"""
Data models for bound verification.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from ..core.ball import BallReal


class BoundId(str, Enum):
    """Identifier of each inequality the harness checks."""
    LEMMA21 = "lemma21"
    LEMMA22 = "lemma22"
    LEMMA23 = "lemma23"
    THM31 = "thm31"
    THM31_TAYLOR = "thm31_taylor"
    THM11 = "thm11"
    COR33_CROSSOVER = "cor33_crossover"
    COR33_DIRECT = "cor33_direct"
    EQ2_IDENTITY = "eq2_identity"
    LOG_ZETA_MAJORANT = "log_zeta_majorant"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> "BoundId":
        aliases = {"eq2": cls.EQ2_IDENTITY, "cor33": cls.COR33_CROSSOVER}
        if name in aliases:
            return aliases[name]
        return cls(name)


@dataclass
class BoundReport:
    """One comparison lhs <= rhs at one grid point."""
    bound_id: BoundId
    p: int
    parameters: Dict[str, str]
    lhs: Optional[BallReal]
    rhs: Optional[BallReal]
    passed: bool
    notes: str = ""
    skipped: bool = False
    informational: bool = False

    @classmethod
    def compare(
        cls,
        bound_id: BoundId,
        p: int,
        lhs: BallReal,
        rhs: BallReal,
        parameters: Optional[Dict[str, str]] = None,
        notes: str = "",
        informational: bool = False,
    ) -> "BoundReport":
        return cls(
            bound_id=bound_id,
            p=p,
            parameters=parameters or {},
            lhs=lhs,
            rhs=rhs,
            passed=bool(lhs.upper <= rhs.lower),
            notes=notes,
            informational=informational,
        )

    @classmethod
    def skip(cls, bound_id: BoundId, p: int, notes: str, parameters: Optional[Dict[str, str]] = None) -> "BoundReport":
        return cls(bound_id=bound_id, p=p, parameters=parameters or {}, lhs=None, rhs=None,
                   passed=False, notes=notes, skipped=True)

    @property
    def failed(self) -> bool:
        """A failure that counts against the run."""
        return not (self.passed or self.skipped or self.informational)

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        if self.passed:
            return "PASS"
        return "INFO" if self.informational else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bound_id": self.bound_id.value,
            "p": self.p,
            "parameters": dict(self.parameters),
            "lhs": self.lhs.to_dict() if self.lhs is not None else None,
            "rhs": self.rhs.to_dict() if self.rhs is not None else None,
            "passed": self.passed,
            "status": self.status,
            "informational": self.informational,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BoundReport":
        return cls(
            bound_id=BoundId(data["bound_id"]),
            p=int(data["p"]),
            parameters=dict(data.get("parameters") or {}),
            lhs=BallReal.from_dict(data["lhs"]) if data.get("lhs") else None,
            rhs=BallReal.from_dict(data["rhs"]) if data.get("rhs") else None,
            passed=bool(data["passed"]),
            notes=data.get("notes", ""),
            skipped=data.get("status") == "SKIP",
            informational=bool(data.get("informational", False)),
        )


@dataclass
class CrossoverReport:
    """Where the worst-case bound on |f(1)| drops below ((p - 1)/4) log(4 pi^2 / 39)."""
    p_lo: int
    p_hi: int
    reports: List[BoundReport] = field(default_factory=list)
    largest_failing: Optional[int] = None
    first_permanent_pass: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p_lo": self.p_lo,
            "p_hi": self.p_hi,
            "primes": len(self.reports),
            "largest_failing": self.largest_failing,
            "first_permanent_pass": self.first_permanent_pass,
        }
