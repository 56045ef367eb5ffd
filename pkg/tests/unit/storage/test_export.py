"""
Tests for CSV and JSON-lines exports.
"""

import io
import json

from kummerx.bounds import BoundId, BoundReport
from kummerx.core.ball import BallReal
from kummerx.storage import REPORT_COLUMNS, SCAN_COLUMNS, report_row, scan_row, write_csv, write_jsonl, write_rows

RECORD = {
    "p": 23,
    "h_minus": "3",
    "log_G": {"mid": "0.1", "rad": "1e-30", "bits": 128},
    "log_ratio": {"mid": "0.9", "rad": "1e-30", "bits": 128},
    "method": "both",
    "precision_bits": 160,
    "certified": True,
}


class TestScanRow:
    """Rows built from cached payloads."""

    def test_without_exceptional_zero(self):
        row = scan_row(RECORD, {"present": False, "beta": None})
        assert row["siegel_beta"] is None
        assert row["h_minus"] == "3"

    def test_with_exceptional_zero(self):
        beta = {"mid": "0.99", "rad": "1e-10", "bits": 128}
        assert scan_row(RECORD, {"present": True, "beta": beta})["siegel_beta"] == beta

    def test_without_siegel_report(self):
        assert scan_row(RECORD)["siegel_beta"] is None


class TestWriters:
    """CSV and JSONL layout."""

    def test_csv(self):
        other = dict(RECORD, p=5, h_minus="1", certified=False)
        stream = io.StringIO()
        count = write_csv([scan_row(RECORD), scan_row(other)], stream)
        assert count == 2
        lines = stream.getvalue().split("\n")
        assert lines[0] == ",".join(SCAN_COLUMNS)
        assert lines[1] == "5,1,0.1,0.9,,160,both,false"
        assert lines[2] == "23,3,0.1,0.9,,160,both,true"
        assert lines[3] == ""
        assert "\r" not in stream.getvalue()

    def test_jsonl(self):
        stream = io.StringIO()
        assert write_jsonl([dict(RECORD, p=29), RECORD], stream) == 2
        rows = [json.loads(line) for line in stream.getvalue().splitlines()]
        assert [r["p"] for r in rows] == [23, 29]
        assert rows[0]["log_G"]["bits"] == 128

    def test_write_rows_dispatch(self):
        csv_stream, json_stream = io.StringIO(), io.StringIO()
        write_rows([RECORD], csv_stream, "csv", SCAN_COLUMNS)
        write_rows([RECORD], json_stream, "jsonl", SCAN_COLUMNS)
        assert csv_stream.getvalue().startswith("p,h_minus")
        assert json_stream.getvalue().startswith("{")

    def test_empty_csv_has_header_only(self):
        stream = io.StringIO()
        assert write_csv([], stream) == 0
        assert stream.getvalue() == ",".join(SCAN_COLUMNS) + "\n"


class TestReportRow:
    """Bound reports as rows."""

    def test_parameters_are_flattened(self):
        report = BoundReport.compare(
            BoundId.LEMMA22, 503, BallReal(1), BallReal(2), {"sigma": "1.02", "nu": "1"}
        )
        row = report_row(report)
        assert row["parameters"] == "nu=1;sigma=1.02"
        assert row["status"] == "PASS"

    def test_csv_of_reports(self):
        reports = [
            BoundReport.skip(BoundId.THM31, 7, "small"),
            BoundReport.compare(BoundId.THM31, 503, BallReal(1), BallReal(2)),
        ]
        stream = io.StringIO()
        write_csv([report_row(r) for r in reports], stream, REPORT_COLUMNS)
        lines = stream.getvalue().splitlines()
        assert lines[0] == ",".join(REPORT_COLUMNS)
        assert lines[1] == "thm31,7,,,,SKIP,small"
        assert lines[2].startswith("thm31,503,,1.0,2.0,PASS")
