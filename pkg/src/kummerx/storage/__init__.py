"""
Result persistence: the append-only cache and the CSV/JSONL exports.
"""

from .cache import ResultCache
from .export import REPORT_COLUMNS, SCAN_COLUMNS, report_row, scan_row, write_csv, write_jsonl, write_rows
from .models import CacheEntry, EntryKind

__all__ = [
    "CacheEntry",
    "EntryKind",
    "REPORT_COLUMNS",
    "ResultCache",
    "SCAN_COLUMNS",
    "report_row",
    "scan_row",
    "write_csv",
    "write_jsonl",
    "write_rows",
]
