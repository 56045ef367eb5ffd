"""
Tests for B_{1,chi}, the Maillet determinant and h_p^-.
"""

import math

import pytest

from kummerx.arith import sieve_primes
from kummerx.chars import Character
from kummerx.classnumber import (
    HminusMethod,
    RelativeClassNumberRecord,
    b1_chi,
    b1_norm,
    bareiss_determinant,
    certify_integer,
    compute_hminus,
    g_factor_log,
    hminus_analytic_value,
    hminus_initial_bits,
    kummer_log_ratio,
    maillet_determinant,
    maillet_hminus,
    maillet_matrix,
)
from kummerx.core.ball import BallComplex, BallReal
from kummerx.core.exceptions import CertificationError, InvalidInputError
from kummerx.core.precision import PrecisionPolicy
from kummerx.lfunc import f_at_one

KNOWN_HMINUS = {
    3: 1, 5: 1, 7: 1, 11: 1, 13: 1, 17: 1, 19: 1,
    23: 3, 29: 8, 31: 9, 37: 37, 41: 121, 43: 211, 47: 695,
}


class TestBernoulli:
    """Generalized Bernoulli numbers B_{1,chi}."""

    def test_p3(self):
        value = b1_chi(Character(3, 1))
        assert abs(float(value.re) + 1 / 3) < 1e-15
        assert value.im.contains_zero()

    def test_p5(self):
        value = b1_chi(Character(5, 1))
        assert abs(float(value.re) + 0.6) < 1e-15
        assert abs(float(value.im) + 0.2) < 1e-15

    def test_norm(self):
        assert abs(float(b1_norm(Character(5, 1))) - 0.4) < 1e-15
        assert abs(float(b1_norm(Character(5, 3))) - 0.4) < 1e-15

    def test_even_character_is_rejected(self):
        with pytest.raises(InvalidInputError):
            b1_chi(Character(5, 2))


class TestMaillet:
    """Exact determinants."""

    def test_matrix_p5(self):
        assert maillet_matrix(5) == [[1, 3], [2, 1]]

    def test_determinants(self):
        assert maillet_determinant(5) == -5
        assert maillet_determinant(7) == 49

    def test_bareiss(self):
        assert bareiss_determinant([]) == 1
        assert bareiss_determinant([[2, 0], [0, 3]]) == 6
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1
        assert bareiss_determinant([[1, 2], [2, 4]]) == 0
        assert bareiss_determinant([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]) == 4

    @pytest.mark.parametrize("p,h", sorted(KNOWN_HMINUS.items()))
    def test_maillet_hminus(self, p, h):
        assert maillet_hminus(p) == h


class TestComputeHminus:
    """The certified analytic route, cross-checked below the oracle ceiling."""

    @pytest.mark.parametrize("p,h", sorted(KNOWN_HMINUS.items()))
    def test_known_values(self, p, h):
        record = compute_hminus(p)
        assert record.h_minus == h
        assert record.method is HminusMethod.BOTH
        assert record.certified

    def test_analytic_above_ceiling(self):
        record = compute_hminus(37, oracle_ceiling=10)
        assert record.h_minus == 37
        assert record.method is HminusMethod.ANALYTIC
        assert record.precision_bits >= hminus_initial_bits(37)

    def test_analytic_request_below_ceiling_runs_both(self):
        assert compute_hminus(23, method="analytic").method is HminusMethod.BOTH

    def test_maillet_only(self):
        record = compute_hminus(29, method=HminusMethod.MAILLET)
        assert record.h_minus == 8
        assert record.precision_bits == 0
        assert record.integrality_gap is None

    def test_unknown_method(self):
        with pytest.raises(InvalidInputError):
            compute_hminus(5, method="guess")

    def test_beyond_analytic_cap(self):
        with pytest.raises(InvalidInputError):
            compute_hminus(4003)

    def test_not_a_prime(self):
        with pytest.raises(InvalidInputError):
            compute_hminus(21)

    def test_initial_bits(self):
        assert hminus_initial_bits(23) == 155

    def test_requested_precision_is_used(self):
        record = compute_hminus(23, policy=PrecisionPolicy(initial_bits=512, max_bits=4096))
        assert record.precision_bits == 512
        assert record.h_minus == 3

    def test_requested_precision_below_floor(self):
        record = compute_hminus(23, policy=PrecisionPolicy(initial_bits=64, max_bits=4096))
        assert record.precision_bits >= hminus_initial_bits(23)

    @pytest.mark.slow
    def test_analytic_matches_maillet_for_all_small_primes(self):
        for p in sieve_primes(199):
            if p == 2:
                continue
            h, _, gap = hminus_analytic_value(int(p))
            assert h == maillet_hminus(int(p)), p
            assert gap < 2**-8, p

    def test_record_dict(self):
        record = compute_hminus(41)
        data = record.to_dict()
        assert data["h_minus"] == "121"
        assert data["method"] == "both"
        restored = RelativeClassNumberRecord.from_dict(data)
        assert restored.h_minus == 121
        assert restored.method is HminusMethod.BOTH
        assert abs(float(restored.log_ratio) - float(record.log_ratio)) < 1e-15


class TestCertifyInteger:
    """Integer extraction from a real enclosure."""

    def test_narrow_enclosure(self):
        h, gap = certify_integer(BallComplex(BallReal.from_bounds(2.9, 3.1), 0))
        assert h == 3
        assert gap < 1e-10

    def test_negative_product_is_taken_in_absolute_value(self):
        h, _ = certify_integer(BallComplex(BallReal.from_bounds(-5.1, -4.9), 0))
        assert h == 5

    def test_wide_enclosure(self):
        with pytest.raises(CertificationError):
            certify_integer(BallComplex(BallReal.from_bounds(2, 4), 0))

    def test_imaginary_part_away_from_zero(self):
        with pytest.raises(CertificationError):
            certify_integer(BallComplex(3, 1))

    def test_midpoint_between_integers(self):
        with pytest.raises(CertificationError):
            certify_integer(BallComplex(BallReal.from_bounds(3.4, 3.6), 0))


class TestKummerRatio:
    """log G(p) and log(h_p^- / G(p))."""

    def test_g_factor_p5(self):
        assert abs(float(g_factor_log(5)) - math.log(50 / (4 * math.pi**2))) < 1e-15

    def test_ratio_for_trivial_class_number(self):
        assert abs(float(kummer_log_ratio(5)) + math.log(50 / (4 * math.pi**2))) < 1e-15

    @pytest.mark.parametrize("p", [3, 5, 23, 41])
    def test_ratio_equals_f_at_one(self, p):
        ratio = kummer_log_ratio(p)
        value = f_at_one(p).value
        assert ratio.overlaps(value)
        assert abs(float(ratio) - float(value)) < 1e-12

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [101, 503])
    def test_ratio_equals_f_at_one_for_larger_primes(self, p):
        assert kummer_log_ratio(p).overlaps(f_at_one(p).value)

    def test_record_for_other_prime(self):
        with pytest.raises(InvalidInputError):
            kummer_log_ratio(5, record=compute_hminus(7))

    def test_uncertified_record(self):
        record = compute_hminus(7)
        record.certified = False
        with pytest.raises(CertificationError):
            kummer_log_ratio(7, record=record)
