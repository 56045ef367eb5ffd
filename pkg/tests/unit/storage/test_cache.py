"""
Tests for the append-only result cache.
"""

import json

import pytest
from pydantic import ValidationError

from kummerx.storage import CacheEntry, EntryKind, ResultCache


def _entry(p: int, fingerprint: str = "abc", kind: EntryKind = EntryKind.HMINUS, h: str = "1") -> CacheEntry:
    return CacheEntry(kind=kind, p=p, payload={"p": p, "h_minus": h}, config_fingerprint=fingerprint)


class TestCacheEntry:
    """The cached line model."""

    def test_key(self):
        assert _entry(23).key() == ("hminus", 23, "abc")

    def test_timestamp_is_utc(self):
        assert _entry(23).timestamp.endswith("+00:00")

    def test_rejects_small_p(self):
        with pytest.raises(ValidationError):
            _entry(2)

    def test_kind_is_parsed(self):
        entry = CacheEntry(kind="siegel", p=7, payload={}, config_fingerprint="x")
        assert entry.kind is EntryKind.SIEGEL
        assert str(entry.kind) == "siegel"


class TestResultCache:
    """Lookup, append and reload."""

    @pytest.mark.asyncio
    async def test_append_then_lookup(self, temp_dir):
        cache = ResultCache(temp_dir / "cache.jsonl")
        await cache.append(_entry(23, h="3"))
        hit = cache.lookup(EntryKind.HMINUS, 23, "abc")
        assert hit is not None and hit.payload["h_minus"] == "3"
        assert cache.lookup(EntryKind.HMINUS, 23, "other") is None
        assert cache.lookup(EntryKind.SIEGEL, 23, "abc") is None

    @pytest.mark.asyncio
    async def test_file_is_json_lines(self, temp_dir):
        path = temp_dir / "cache.jsonl"
        cache = ResultCache(path)
        await cache.append_many([_entry(23, h="3"), _entry(29, h="8")])
        lines = path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 2
        first = json.loads(lines[0])
        assert first["kind"] == "hminus"
        assert first["payload"] == {"h_minus": "3", "p": 23}
        assert list(first) == sorted(first)

    @pytest.mark.asyncio
    async def test_reload_from_disk(self, temp_dir):
        path = temp_dir / "nested" / "cache.jsonl"
        await ResultCache(path).append_many([_entry(23, h="3"), _entry(29, h="8")])
        fresh = ResultCache(path)
        assert fresh.load() == 2
        assert [e.p for e in fresh.entries(EntryKind.HMINUS)] == [23, 29]

    @pytest.mark.asyncio
    async def test_later_lines_win(self, temp_dir):
        path = temp_dir / "cache.jsonl"
        cache = ResultCache(path)
        await cache.append(_entry(23, h="2"))
        await cache.append(_entry(23, h="3"))
        fresh = ResultCache(path)
        assert fresh.lookup(EntryKind.HMINUS, 23, "abc").payload["h_minus"] == "3"

    def test_bad_lines_are_skipped(self, temp_dir):
        path = temp_dir / "cache.jsonl"
        good = _entry(23).model_dump(mode="json")
        path.write_text(
            "not json\n"
            + json.dumps({"kind": "hminus", "p": 1, "payload": {}, "config_fingerprint": "x"})
            + "\n\n"
            + json.dumps(good)
            + "\n",
            encoding="utf-8",
        )
        cache = ResultCache(path)
        assert cache.load() == 1
        assert cache.lookup(EntryKind.HMINUS, 23, "abc") is not None

    def test_missing_file_is_empty(self, temp_dir):
        assert ResultCache(temp_dir / "absent.jsonl").load() == 0

    @pytest.mark.asyncio
    async def test_memory_only(self, temp_dir):
        cache = ResultCache()
        await cache.append(_entry(23))
        await cache.append_many([])
        assert cache.lookup(EntryKind.HMINUS, 23, "abc") is not None
        assert list(temp_dir.iterdir()) == []

    @pytest.mark.asyncio
    async def test_entries_filter_by_kind(self):
        cache = ResultCache()
        await cache.append_many([_entry(29), _entry(23), _entry(7, kind=EntryKind.SIEGEL)])
        assert [e.p for e in cache.entries(EntryKind.HMINUS)] == [23, 29]
        assert [e.p for e in cache.entries()] == [23, 29, 7]
