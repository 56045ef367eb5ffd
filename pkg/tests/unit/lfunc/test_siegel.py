"""
Tests for the exceptional-zero scan.
"""

from fractions import Fraction

import pytest

from kummerx.core.exceptions import InvalidInputError
from kummerx.lfunc import (
    SIEGEL_ASSUMPTION,
    ZERO_FREE_CONSTANT,
    SiegelMethod,
    SiegelZeroReport,
    left_endpoint,
    quadratic_l_value,
    siegel_scan,
)


class TestLeftEndpoint:
    """1 - 1/(c log p)."""

    def test_value(self):
        value = float(left_endpoint(503, ZERO_FREE_CONSTANT))
        assert abs(value - (1 - 1 / (6.4355 * 6.220590170))) < 1e-9

    def test_grows_with_c(self):
        assert float(left_endpoint(7, 10)) > float(left_endpoint(7, ZERO_FREE_CONSTANT))


class TestSiegelScan:
    """Presence or absence of the exceptional zero."""

    def test_even_quadratic_character(self):
        report = siegel_scan(13)
        assert report.method is SiegelMethod.NOT_QUADRATIC
        assert not report.present
        assert report.indicator == 0
        assert report.certified

    def test_endpoint_positivity(self):
        report = siegel_scan(7)
        assert report.method is SiegelMethod.ENDPOINT_POSITIVITY
        assert not report.present
        assert report.beta is None
        assert report.endpoint_value.is_positive()

    @pytest.mark.parametrize("p", [3, 11, 19, 23, 43, 67, 163])
    def test_small_primes_have_no_exceptional_zero(self, p):
        assert not siegel_scan(p).present

    def test_c_below_zero_free_constant(self):
        with pytest.raises(InvalidInputError):
            siegel_scan(7, 5)

    def test_larger_c_is_accepted(self):
        report = siegel_scan(7, Fraction(8))
        assert report.c == 8
        assert not report.present

    def test_quadratic_value_at_one(self):
        assert abs(float(quadratic_l_value(7, 1, 128)) - 1.187410) < 1e-6


class TestSiegelReport:
    """Serialized form of the report."""

    def test_to_dict(self):
        data = siegel_scan(7).to_dict()
        assert data["present"] is False
        assert data["method"] == "endpoint-positivity"
        assert data["c"] == "6.4355"
        assert data["interval"][1] == "1"
        assert data["assumption"] == SIEGEL_ASSUMPTION

    def test_from_dict_restores_decision(self):
        report = siegel_scan(7)
        restored = SiegelZeroReport.from_dict(report.to_dict())
        assert restored.p == 7
        assert restored.method is SiegelMethod.ENDPOINT_POSITIVITY
        assert restored.c == ZERO_FREE_CONSTANT
        assert restored.endpoint_value.is_positive()
        assert str(restored.method) == "endpoint-positivity"
