"""
CSV and JSON-lines exports of scan records and bound reports.

Rows come out in ascending p with '\\n' line endings; exact integers are
decimal strings, reals are the decimal midpoint (CSV) or {mid, rad, bits}
(JSONL).
"""

import csv
import json
from typing import Any, Dict, Iterable, List, Optional, TextIO

from ..bounds.models import BoundReport

SCAN_COLUMNS = ["p", "h_minus", "log_G", "log_ratio", "siegel_beta", "precision_bits", "method", "certified"]
REPORT_COLUMNS = ["bound_id", "p", "parameters", "lhs", "rhs", "status", "notes"]


def scan_row(record: Dict[str, Any], siegel: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    One scanned prime, from the serialized record and Siegel report.

    Rows are built from the cached payloads so that a resumed scan prints
    exactly what the first run printed.
    """
    row = dict(record)
    row["siegel_beta"] = siegel.get("beta") if siegel and siegel.get("present") else None
    return row


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict) and "mid" in value:
        return value["mid"]
    return str(value)


def write_csv(rows: Iterable[Dict[str, Any]], stream: TextIO, columns: List[str] = SCAN_COLUMNS) -> int:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    count = 0
    for row in sorted(rows, key=lambda r: int(r["p"])):
        writer.writerow([_cell(row.get(column)) for column in columns])
        count += 1
    return count


def write_jsonl(rows: Iterable[Dict[str, Any]], stream: TextIO) -> int:
    count = 0
    for row in sorted(rows, key=lambda r: int(r["p"])):
        stream.write(json.dumps(row, sort_keys=True, separators=(",", ":")) + "\n")
        count += 1
    return count


def report_row(report: BoundReport) -> Dict[str, Any]:
    row = report.to_dict()
    row["parameters"] = ";".join(f"{k}={v}" for k, v in sorted(report.parameters.items()))
    return row


def write_rows(rows: Iterable[Dict[str, Any]], stream: TextIO, output_format: str, columns: List[str]) -> int:
    if output_format == "jsonl":
        return write_jsonl(rows, stream)
    return write_csv(rows, stream, columns)
