"""
Run configuration models.

Settings are layered: built-in defaults, then the YAML file, then the
environment, then command-line flags.
"""

import hashlib
import json
import re
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from ..classnumber.analytic import ANALYTIC_CAP
from ..classnumber.kummer import DEFAULT_ORACLE_CEILING
from ..core.ball import exact_real
from ..core.precision import PrecisionPolicy
from ..hurwitz.models import EulerMaclaurinParameters
from ..lfunc.models import ZERO_FREE_CONSTANT

DEFAULT_CACHE_PATH = "kummerx_cache.jsonl"

# "2p", "10*p", "p^2", "10^7", "503"
_X_EXPRESSION = re.compile(r"^\s*(\d+)?\s*\*?\s*(p)?\s*(?:\^\s*(\d+))?\s*$")


def resolve_x(expression: str, p: int) -> int:
    """Evaluate an x-grid expression for the prime p."""
    match = _X_EXPRESSION.match(str(expression))
    if not match or not (match.group(1) or match.group(2)):
        raise ValueError(f"invalid x expression {expression!r}")
    coefficient, symbol, power = match.groups()
    k = int(power) if power else 1
    if symbol:
        return int(coefficient or 1) * p ** k
    return int(coefficient) ** k


class GridConfig(BaseModel):
    """Sweep grids for the bound checks."""
    # lemma21 cut-offs; points with x <= p are dropped per prime
    x_values: List[str] = Field(default_factory=lambda: ["2p", "10p", "p^2", "10^7"])
    # lemma22 and the log-zeta majorant: sigma = 1 + t/(c log p), 0 < t <= 1
    sigma_fractions: List[float] = Field(default_factory=lambda: [1.0, 0.5])
    # lemma23: sigma = 1 + m/(c log p), 0 < m <= 2
    sigma_multipliers: List[float] = Field(default_factory=lambda: [1.0, 2.0])
    nu_values: List[int] = Field(default_factory=lambda: [0, 1, 2, 3])
    eq2_sigmas: List[float] = Field(default_factory=lambda: [2.0])
    eq2_truncation: int = Field(default=10_000_000, ge=16)

    @field_validator("x_values")
    @classmethod
    def _check_x(cls, values: List[str]) -> List[str]:
        for value in values:
            resolve_x(value, 3)
        return values

    @field_validator("sigma_fractions")
    @classmethod
    def _check_fractions(cls, values: List[float]) -> List[float]:
        if any(not 0 < v <= 1 for v in values):
            raise ValueError("sigma_fractions must lie in (0, 1]")
        return values

    @field_validator("sigma_multipliers")
    @classmethod
    def _check_multipliers(cls, values: List[float]) -> List[float]:
        if any(not 0 < v <= 2 for v in values):
            raise ValueError("sigma_multipliers must lie in (0, 2]")
        return values

    @field_validator("nu_values")
    @classmethod
    def _check_nu(cls, values: List[int]) -> List[int]:
        if any(v < 0 for v in values):
            raise ValueError("nu_values must be non-negative")
        return sorted(set(values))

    @field_validator("eq2_sigmas")
    @classmethod
    def _check_eq2_sigmas(cls, values: List[float]) -> List[float]:
        if any(v < 2 for v in values):
            raise ValueError("eq2_sigmas must be >= 2")
        return values


class RunConfig(BaseModel):
    """Everything a run needs besides the prime range."""
    precision: PrecisionPolicy = Field(default_factory=PrecisionPolicy)
    oracle_ceiling: int = Field(default=DEFAULT_ORACLE_CEILING, ge=3)
    analytic_cap: int = Field(default=ANALYTIC_CAP, ge=3)
    grids: GridConfig = Field(default_factory=GridConfig)
    c_override: Optional[float] = None
    force_siegel: bool = False
    output_format: Literal["csv", "jsonl"] = "csv"
    cache_path: Optional[str] = DEFAULT_CACHE_PATH
    workers: int = Field(default=1, ge=1)
    em_shift: Optional[int] = Field(default=None, ge=1)
    em_depth: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_constants(self) -> "RunConfig":
        if self.c_override is not None and exact_real(self.c_override) < ZERO_FREE_CONSTANT:
            raise ValueError(f"c_override must be at least {float(ZERO_FREE_CONSTANT)}")
        if self.analytic_cap > ANALYTIC_CAP:
            raise ValueError(f"analytic_cap cannot exceed {ANALYTIC_CAP}")
        if (self.em_shift is None) != (self.em_depth is None):
            raise ValueError("em_shift and em_depth must be given together")
        return self

    @property
    def prec(self) -> int:
        return self.precision.initial_bits

    def c_for(self, default: Any = ZERO_FREE_CONSTANT) -> Any:
        """The c in force: the override when set, else ``default``."""
        if self.c_override is not None:
            return exact_real(self.c_override)
        return default

    def euler_maclaurin(self) -> Optional[EulerMaclaurinParameters]:
        if self.em_shift is None:
            return None
        return EulerMaclaurinParameters(shift=self.em_shift, depth=self.em_depth)

    def computation_settings(self) -> Dict[str, Any]:
        """The fields that change computed values."""
        return {
            "precision": self.precision.model_dump(),
            "oracle_ceiling": self.oracle_ceiling,
            "c_override": str(exact_real(self.c_override)) if self.c_override is not None else None,
            "em_shift": self.em_shift,
            "em_depth": self.em_depth,
        }

    def fingerprint(self) -> str:
        canonical = json.dumps(self.computation_settings(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

