"""
Precision escalation.

Certified computations run at a starting precision and are retried at twice
the bits whenever an enclosure turns out too wide to decide what was asked.
"""

from typing import Callable, Optional, TypeVar

from pydantic import BaseModel, Field, model_validator

from ..utils.logger import get_logger
from .ball import DEFAULT_PRECISION
from .exceptions import PrecisionExhaustedError

logger = get_logger(__name__)

T = TypeVar("T")

MAX_PRECISION = 4096


class PrecisionPolicy(BaseModel):
    """Starting precision and cap for escalation."""
    initial_bits: int = Field(default=DEFAULT_PRECISION, ge=64)
    max_bits: int = Field(default=MAX_PRECISION, ge=64)

    @model_validator(mode="after")
    def _check_order(self) -> "PrecisionPolicy":
        if self.initial_bits > self.max_bits:
            raise ValueError(
                f"initial_bits ({self.initial_bits}) exceeds max_bits ({self.max_bits})"
            )
        return self

    def schedule(self, start: Optional[int] = None):
        """Yield the precisions tried, doubling from ``start`` up to the cap."""
        bits = start or self.initial_bits
        cap = max(self.max_bits, bits)
        while True:
            yield bits
            if bits >= cap:
                return
            bits = min(2 * bits, cap)


def escalate(
    compute: Callable[[int], T],
    policy: Optional[PrecisionPolicy] = None,
    start: Optional[int] = None,
    what: str = "computation",
) -> T:
    """
    Run ``compute(bits)`` with increasing precision until it succeeds.

    Raises the last PrecisionExhaustedError once the cap has been tried.
    """
    policy = policy or PrecisionPolicy()
    last_error: Optional[PrecisionExhaustedError] = None
    for bits in policy.schedule(start):
        if last_error is not None:
            logger.warning(f"{what}: retrying at {bits} bits ({last_error})")
        try:
            return compute(bits)
        except PrecisionExhaustedError as e:
            last_error = e
    logger.error(f"{what}: precision cap reached without a certified result")
    assert last_error is not None
    raise last_error
