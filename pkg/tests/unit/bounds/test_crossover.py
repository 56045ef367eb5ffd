"""
Tests for report models and the class-number estimate crossover.
"""

import pytest

from kummerx.bounds import (
    STATED_THRESHOLD,
    BoundId,
    BoundReport,
    cor33_crossover,
    cor33_direct,
    crossover_point,
    summarize_crossover,
)
from kummerx.classnumber import compute_hminus
from kummerx.core.ball import BallReal
from kummerx.core.exceptions import InvalidInputError


def _report(p: int, passed: bool) -> BoundReport:
    return BoundReport(
        bound_id=BoundId.COR33_CROSSOVER, p=p, parameters={}, lhs=None, rhs=None, passed=passed
    )


class TestBoundId:
    """Identifiers and their command-line aliases."""

    def test_parse(self):
        assert BoundId.parse("eq2") is BoundId.EQ2_IDENTITY
        assert BoundId.parse("cor33") is BoundId.COR33_CROSSOVER
        assert BoundId.parse("lemma22") is BoundId.LEMMA22
        assert str(BoundId.THM31_TAYLOR) == "thm31_taylor"

    def test_unknown(self):
        with pytest.raises(ValueError):
            BoundId.parse("lemma99")


class TestBoundReport:
    """Pass, fail, skip and informational outcomes."""

    def test_compare_uses_certified_endpoints(self):
        passed = BoundReport.compare(BoundId.THM31, 503, BallReal(1), BallReal(2))
        assert passed.passed and passed.status == "PASS" and not passed.failed
        overlapping = BoundReport.compare(
            BoundId.THM31, 503, BallReal.from_bounds(1, 3), BallReal(2)
        )
        assert not overlapping.passed
        assert overlapping.status == "FAIL" and overlapping.failed

    def test_informational_failure_does_not_count(self):
        report = BoundReport.compare(BoundId.COR33_DIRECT, 23, BallReal(3), BallReal(2), informational=True)
        assert report.status == "INFO"
        assert not report.failed

    def test_skip(self):
        report = BoundReport.skip(BoundId.LEMMA22, 7, "p below 500")
        assert report.status == "SKIP"
        assert not report.failed
        assert report.to_dict()["lhs"] is None

    def test_dict_round_trip_keeps_status(self):
        for report in (
            BoundReport.compare(BoundId.LEMMA23, 503, BallReal(1), BallReal(2), {"nu": "1"}),
            BoundReport.skip(BoundId.THM11, 7, "small"),
        ):
            restored = BoundReport.from_dict(report.to_dict())
            assert restored.status == report.status
            assert restored.parameters == report.parameters
            assert restored.bound_id is report.bound_id


class TestSummarizeCrossover:
    """Largest failing prime and first permanent pass."""

    def test_mixed(self):
        reports = [_report(541, True), _report(503, False), _report(509, True), _report(521, False), _report(523, True)]
        summary = summarize_crossover(500, 600, reports)
        assert summary.largest_failing == 521
        assert summary.first_permanent_pass == 523
        assert [r.p for r in summary.reports] == [503, 509, 521, 523, 541]

    def test_all_pass(self):
        summary = summarize_crossover(500, 600, [_report(503, True), _report(509, True)])
        assert summary.largest_failing is None
        assert summary.first_permanent_pass == 503

    def test_all_fail(self):
        summary = summarize_crossover(500, 600, [_report(503, False)])
        assert summary.largest_failing == 503
        assert summary.first_permanent_pass is None
        assert summary.to_dict()["primes"] == 1


class TestCrossover:
    """The worst-case bound against ((p - 1)/4) log(4 pi^2 / 39)."""

    def test_stated_threshold_still_fails(self):
        assert not crossover_point(STATED_THRESHOLD).passed

    def test_next_prime_passes(self):
        report = crossover_point(9661)
        assert report.passed
        assert report.parameters["indicator"] == "1"

    def test_scan_around_threshold(self):
        summary = cor33_crossover(9600, 9700)
        assert summary.largest_failing == 9649
        assert summary.first_permanent_pass == 9661

    def test_primes_at_most_500_are_left_out(self):
        summary = cor33_crossover(400, 503)
        assert [r.p for r in summary.reports] == [503]

    def test_empty_range(self):
        with pytest.raises(InvalidInputError):
            cor33_crossover(600, 500)


class TestDirectEstimate:
    """log h_p^- against the closed form, below the stated threshold."""

    def test_p23_is_informational(self):
        report = cor33_direct(23, compute_hminus(23))
        assert not report.passed
        assert report.informational
        assert report.status == "INFO"

    def test_p47_holds(self):
        report = cor33_direct(47, compute_hminus(47))
        assert report.passed
        assert report.parameters["h_minus"] == "695"

    def test_record_for_other_prime(self):
        with pytest.raises(InvalidInputError):
            cor33_direct(29, compute_hminus(23))
