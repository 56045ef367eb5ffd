"""
Tests for the prime-power identity at sigma >= 2.
"""

from fractions import Fraction

import pytest

from kummerx.arith import prime_powers_in_class
from kummerx.core.exceptions import DomainError, InvalidInputError
from kummerx.lfunc import eq2_components, eq2_residual, weighted_power_sum


class TestWeightedPowerSum:
    """Enclosures of sum 1/(m q^(m sigma))."""

    def test_integral_sigma(self):
        powers = prime_powers_in_class(5, 1, 50)
        value = weighted_power_sum(powers, Fraction(2), 128)
        expected = 1 / 11**2 + 1 / (4 * 16**2) + 1 / 31**2 + 1 / 41**2
        assert abs(float(value) - expected) < 1e-16
        assert value.lower <= value.upper

    def test_fractional_sigma(self):
        powers = prime_powers_in_class(5, -1, 50)
        value = weighted_power_sum(powers, Fraction(5, 2), 128)
        expected = sum(1 / (pp.m * pp.value**2.5) for pp in powers)
        assert abs(float(value) - expected) < 1e-15

    def test_empty(self):
        assert weighted_power_sum([], Fraction(2), 128).contains_zero()


class TestIdentity:
    """The sum of Log L over odd characters against the prime-power side."""

    @pytest.mark.parametrize("p", [5, 7, 11])
    def test_residual_contains_zero(self, p):
        assert eq2_residual(p, 2, 10**5).contains_zero()

    def test_components(self):
        result = eq2_components(7, Fraction(5, 2), 10**5)
        assert result.terms > 0
        assert result.residual.contains_zero()
        assert abs(float(result.lhs) - float(result.truncated)) <= float(result.tail_bound)
        assert float(result.stated_tail) > 0
        assert result.to_dict()["sigma"] == "5/2"

    def test_sigma_below_two(self):
        with pytest.raises(DomainError):
            eq2_components(5, Fraction(3, 2), 10**4)

    def test_truncation_below_p_squared(self):
        with pytest.raises(DomainError):
            eq2_components(503, 2, 1000)

    def test_truncation_cap(self):
        with pytest.raises(InvalidInputError):
            eq2_components(5, 2, 10**9)


class TestResidualWidth:
    """The residual is widened by one class tail, not two."""

    def test_tail_bound_is_half_the_modulus_times_one_class(self):
        result = eq2_components(3, 2, 10**5)
        one_class = 1e-10 + 1e-5 / 3
        assert abs(float(result.tail_bound) - one_class) < 1e-15

    def test_width_within_stated_tail_at_p3(self):
        result = eq2_components(3, 2, 10**5)
        width = float(result.residual.upper) - float(result.residual.lower)
        assert width <= float(result.stated_tail) + 1e-10
        assert result.residual.contains_zero()

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [3, 7, 11, 13, 101])
    def test_full_truncation(self, p):
        result = eq2_components(p, 2, 10**7)
        width = float(result.residual.upper) - float(result.residual.lower)
        assert result.residual.contains_zero()
        assert width <= (p - 1) / 2 * 1e-7 + 1e-10
