"""
Certified ball arithmetic, the exception hierarchy and precision escalation.
"""

from .ball import (
    DEFAULT_PRECISION,
    GUARD_BITS,
    BallComplex,
    BallReal,
    ball_pi,
    ball_sum,
    describe,
    exact_real,
    to_interval,
    working_precision,
)
from .exceptions import (
    CannotDivideError,
    CertificationError,
    ConfigurationError,
    DomainError,
    InternalError,
    InvalidInputError,
    KummerxError,
    PoleError,
    PrecisionExhaustedError,
    UndeterminedSignError,
)
from .precision import MAX_PRECISION, PrecisionPolicy, escalate

__all__ = [
    "BallComplex",
    "BallReal",
    "CannotDivideError",
    "CertificationError",
    "ConfigurationError",
    "DEFAULT_PRECISION",
    "DomainError",
    "GUARD_BITS",
    "InternalError",
    "InvalidInputError",
    "KummerxError",
    "MAX_PRECISION",
    "PoleError",
    "PrecisionExhaustedError",
    "PrecisionPolicy",
    "UndeterminedSignError",
    "ball_pi",
    "ball_sum",
    "describe",
    "escalate",
    "exact_real",
    "to_interval",
    "working_precision",
]
