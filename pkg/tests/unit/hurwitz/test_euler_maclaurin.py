"""
Tests for certified Hurwitz zeta values and derivatives.
"""

from fractions import Fraction

import mpmath
import pytest
from mpmath import iv

from kummerx.core.ball import BallReal, working_precision
from kummerx.core.exceptions import DomainError, InvalidInputError, PoleError
from kummerx.hurwitz import (
    EulerMaclaurinParameters,
    bernoulli_coefficients,
    hurwitz_zeta_derivs,
    hurwitz_zeta_regular_derivs,
)

EULER_GAMMA = 0.5772156649015329
STIELTJES_1 = -0.0728158454836767


class TestParameters:
    """Euler-Maclaurin parameter selection."""

    def test_for_precision(self):
        params = EulerMaclaurinParameters.for_precision(128)
        assert params.shift == 45
        assert params.depth == 26

    def test_small_precision_keeps_minimum_shift(self):
        assert EulerMaclaurinParameters.for_precision(64).shift == 32

    def test_rejects_nonpositive(self):
        with pytest.raises(InvalidInputError):
            EulerMaclaurinParameters(shift=0, depth=4)
        with pytest.raises(InvalidInputError):
            EulerMaclaurinParameters(shift=10, depth=0)

    def test_bernoulli_coefficients(self):
        assert bernoulli_coefficients(3) == (Fraction(1, 12), Fraction(-1, 720), Fraction(1, 30240))


class TestRegularPart:
    """zeta(s, a) - 1/(s - 1) at and near the pole."""

    def test_euler_constant_at_one(self):
        value = hurwitz_zeta_regular_derivs(1, 1, 0, 128)[0]
        assert abs(float(value) - EULER_GAMMA) < 1e-15
        assert value.radius < 1e-30

    def test_half_shift_at_one(self):
        value = hurwitz_zeta_regular_derivs(1, Fraction(1, 2), 0, 128)[0]
        assert abs(float(value) - (EULER_GAMMA + 2 * 0.6931471805599453)) < 1e-14

    def test_first_derivative_is_stieltjes(self):
        values = hurwitz_zeta_regular_derivs(1, 1, 1, 128)
        assert len(values) == 2
        assert abs(float(values[1]) + STIELTJES_1) < 1e-14

    def test_near_pole_is_continuous(self):
        at_one = float(hurwitz_zeta_regular_derivs(1, Fraction(1, 3), 0, 128)[0])
        nearby = float(hurwitz_zeta_regular_derivs(Fraction(1000001, 1000000), Fraction(1, 3), 0, 128)[0])
        assert abs(at_one - nearby) < 1e-4

    def test_digamma_identity(self):
        # regular part at s = 1 equals -digamma(a)
        for a in (Fraction(1, 7), Fraction(3, 7), Fraction(5, 2)):
            value = float(hurwitz_zeta_regular_derivs(1, a, 0, 128)[0])
            expected = -float(mpmath.digamma(mpmath.mpf(a.numerator) / a.denominator))
            assert abs(value - expected) < 1e-13


class TestHurwitzZeta:
    """Full values away from the pole."""

    def test_basel(self):
        value = hurwitz_zeta_derivs(2, 1, 0, 128)[0]
        assert abs(float(value) - 1.6449340668482264) < 1e-15

    def test_derivative_at_two(self):
        values = hurwitz_zeta_derivs(2, 1, 1, 128)
        assert abs(float(values[1]) + 0.9375482543158437) < 1e-14

    def test_matches_mpmath(self):
        with mpmath.workdps(30):
            expected = mpmath.zeta(mpmath.mpf("1.5"), mpmath.mpf("0.3"))
        value = hurwitz_zeta_derivs(Fraction(3, 2), Fraction(3, 10), 0, 128)[0]
        assert abs(float(value) - float(expected)) < 1e-13

    def test_second_derivative_matches_mpmath(self):
        with mpmath.workdps(30):
            expected = mpmath.zeta(mpmath.mpf("1.2"), mpmath.mpf("0.25"), 2)
        value = hurwitz_zeta_derivs(Fraction(6, 5), Fraction(1, 4), 2, 128)[2]
        assert abs(float(value) - float(expected)) < 1e-12

    def test_pole_is_rejected(self):
        with pytest.raises(PoleError):
            hurwitz_zeta_derivs(1, 1, 0, 128)

    def test_invalid_arguments(self):
        with pytest.raises(InvalidInputError):
            hurwitz_zeta_derivs(2, 0, 0, 128)
        with pytest.raises(InvalidInputError):
            hurwitz_zeta_derivs(2, 1, -1, 128)
        with pytest.raises(InvalidInputError):
            hurwitz_zeta_derivs(2, 1, 0, 32)
        with pytest.raises(DomainError):
            hurwitz_zeta_regular_derivs(Fraction(1, 2), 1, 0, 128)


class TestEnclosures:
    """Enclosures contain the true value and tighten with precision."""

    def test_contains_basel_constant(self):
        value = hurwitz_zeta_derivs(2, 1, 0, 128)[0]
        with working_precision(512):
            expected = iv.pi**2 / 6
        assert value.contains(expected)

    def test_contains_half_shift_constant(self):
        # zeta(2, 1/2) = 3 zeta(2) = pi^2 / 2
        value = hurwitz_zeta_derivs(2, Fraction(1, 2), 0, 128)[0]
        with working_precision(512):
            expected = iv.pi**2 / 2
        assert value.contains(expected)

    def test_doubled_precision_refines(self):
        coarse = hurwitz_zeta_derivs(Fraction(3, 2), Fraction(1, 3), 2, 128)
        fine = hurwitz_zeta_derivs(Fraction(3, 2), Fraction(1, 3), 2, 256)
        for low, high in zip(coarse, fine):
            assert high.overlaps(low)
            assert high.radius <= low.radius

    def test_shift_recurrence(self):
        s, a = Fraction(3, 2), Fraction(1, 3)
        here = hurwitz_zeta_derivs(s, a, 0, 128)[0]
        shifted = hurwitz_zeta_derivs(s, a + 1, 0, 128)[0]
        with working_precision(192):
            difference = here - shifted
            # a^(-3/2) = sqrt(27) for a = 1/3
            expected = BallReal(27).sqrt()
        assert difference.overlaps(expected)
        assert abs(float(difference) - 27**0.5) < 1e-12

    @pytest.mark.parametrize("s", [Fraction(11, 10), Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(3)])
    @pytest.mark.parametrize("a", [Fraction(1, 3), Fraction(3, 4)])
    def test_derivative_matches_central_difference(self, s, a):
        h = Fraction(1, 10**6)
        derivative = float(hurwitz_zeta_derivs(s, a, 1, 128)[1])
        above = hurwitz_zeta_derivs(s + h, a, 0, 128)[0]
        below = hurwitz_zeta_derivs(s - h, a, 0, 128)[0]
        with working_precision(160):
            difference = float((above - below) / (2 * h))
        assert abs(difference - derivative) <= 1e-6 * max(1.0, abs(derivative))
