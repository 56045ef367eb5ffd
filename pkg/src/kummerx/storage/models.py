"""
Storage models: one line of the result cache.
"""

from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict

from pydantic import BaseModel, Field


class EntryKind(str, Enum):
    """What a cached payload holds."""
    HMINUS = "hminus"
    SIEGEL = "siegel"

    def __str__(self) -> str:
        return self.value


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class CacheEntry(BaseModel):
    """A cached result; integers in the payload are decimal strings."""
    kind: EntryKind
    p: int = Field(ge=3)
    payload: Dict[str, Any]
    config_fingerprint: str
    timestamp: str = Field(default_factory=_utc_now)

    def key(self) -> tuple:
        return (self.kind.value, self.p, self.config_fingerprint)
