"""
Tests for the precision policy, escalation and the exception hierarchy.
"""

import pytest
from pydantic import ValidationError

from kummerx.core.exceptions import (
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
from kummerx.core.precision import MAX_PRECISION, PrecisionPolicy, escalate


class TestPrecisionPolicy:
    """Validation and the doubling schedule."""

    def test_defaults(self):
        policy = PrecisionPolicy()
        assert policy.initial_bits == 128
        assert policy.max_bits == MAX_PRECISION

    def test_schedule_doubles_up_to_cap(self):
        policy = PrecisionPolicy(initial_bits=100, max_bits=500)
        assert list(policy.schedule()) == [100, 200, 400, 500]

    def test_schedule_with_explicit_start(self):
        policy = PrecisionPolicy(initial_bits=64, max_bits=256)
        assert list(policy.schedule(start=128)) == [128, 256]

    def test_start_above_cap_is_tried_once(self):
        policy = PrecisionPolicy(initial_bits=64, max_bits=128)
        assert list(policy.schedule(start=1000)) == [1000]

    def test_initial_above_max_is_rejected(self):
        with pytest.raises(ValidationError):
            PrecisionPolicy(initial_bits=512, max_bits=256)

    def test_tiny_precision_is_rejected(self):
        with pytest.raises(ValidationError):
            PrecisionPolicy(initial_bits=8)


class TestEscalate:
    """Retry behaviour of escalate."""

    def test_returns_first_success(self):
        seen = []

        def compute(bits):
            seen.append(bits)
            return bits

        assert escalate(compute, PrecisionPolicy(initial_bits=64, max_bits=256)) == 64
        assert seen == [64]

    def test_retries_until_wide_enough(self):
        seen = []

        def compute(bits):
            seen.append(bits)
            if bits < 256:
                raise CannotDivideError("too wide")
            return "ok"

        result = escalate(compute, PrecisionPolicy(initial_bits=64, max_bits=1024))
        assert result == "ok"
        assert seen == [64, 128, 256]

    def test_raises_last_error_at_cap(self):
        def compute(bits):
            raise UndeterminedSignError(f"undecided at {bits}")

        with pytest.raises(UndeterminedSignError, match="undecided at 256"):
            escalate(compute, PrecisionPolicy(initial_bits=64, max_bits=256))

    def test_other_errors_are_not_retried(self):
        calls = []

        def compute(bits):
            calls.append(bits)
            raise DomainError("outside")

        with pytest.raises(DomainError):
            escalate(compute, PrecisionPolicy(initial_bits=64, max_bits=256))
        assert calls == [64]


class TestExceptions:
    """Exit codes carried by the hierarchy."""

    def test_input_errors_exit_with_two(self):
        for cls in (InvalidInputError, ConfigurationError, DomainError, PoleError):
            assert cls("x").exit_code == 2

    def test_precision_errors_exit_with_three(self):
        for cls in (CannotDivideError, UndeterminedSignError, CertificationError, InternalError):
            assert cls("x").exit_code == 3

    def test_hierarchy(self):
        assert issubclass(PoleError, DomainError)
        assert issubclass(CertificationError, PrecisionExhaustedError)
        assert all(
            issubclass(cls, KummerxError)
            for cls in (InvalidInputError, DomainError, PrecisionExhaustedError, InternalError)
        )
