"""
Append-only JSON-lines result cache.

One process writes; entries whose config fingerprint differs from the
current run are ignored on lookup and recomputed.
"""

import json
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import aiofiles
from pydantic import ValidationError

from ..utils.logger import get_logger
from .models import CacheEntry, EntryKind

logger = get_logger(__name__)


class ResultCache:
    """
    JSON-lines cache keyed by (kind, p, config fingerprint).

    With no path the cache lives in memory only.
    """

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = Path(path) if path is not None else None
        self._entries: Dict[Tuple[str, int, str], CacheEntry] = {}
        self._loaded = False

    def load(self) -> int:
        """Read every valid line; later lines win. Returns the number of entries kept."""
        self._entries.clear()
        self._loaded = True
        if self.path is None or not self.path.exists():
            return 0
        with open(self.path, "r", encoding="utf-8") as f:
            for number, line in enumerate(f, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    entry = CacheEntry(**json.loads(line))
                except (json.JSONDecodeError, ValidationError, TypeError) as e:
                    logger.warning(f"{self.path}:{number}: unreadable cache line skipped ({e})")
                    continue
                self._entries[entry.key()] = entry
        logger.info(f"Loaded {len(self._entries)} cache entries from {self.path}")
        return len(self._entries)

    def _ensure_loaded(self) -> None:
        if not self._loaded:
            self.load()

    def lookup(self, kind: EntryKind, p: int, fingerprint: str) -> Optional[CacheEntry]:
        self._ensure_loaded()
        entry = self._entries.get((EntryKind(kind).value, p, fingerprint))
        if entry is None:
            logger.debug(f"cache miss: {kind} p={p}")
        else:
            logger.info(f"cache hit: {kind} p={p}")
        return entry

    def entries(self, kind: Optional[EntryKind] = None) -> List[CacheEntry]:
        self._ensure_loaded()
        out = [e for e in self._entries.values() if kind is None or e.kind == kind]
        return sorted(out, key=lambda e: (e.kind.value, e.p))

    @staticmethod
    def _serialize(entry: CacheEntry) -> str:
        return json.dumps(entry.model_dump(mode="json"), sort_keys=True, separators=(",", ":")) + "\n"

    async def append(self, entry: CacheEntry) -> None:
        """Append one entry to the file and the in-memory index."""
        self._ensure_loaded()
        self._entries[entry.key()] = entry
        if self.path is None:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        async with aiofiles.open(self.path, "a", encoding="utf-8", newline="\n") as f:
            await f.write(self._serialize(entry))

    async def append_many(self, entries: List[CacheEntry]) -> None:
        if not entries:
            return
        self._ensure_loaded()
        for entry in entries:
            self._entries[entry.key()] = entry
        if self.path is None:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        async with aiofiles.open(self.path, "a", encoding="utf-8", newline="\n") as f:
            await f.write("".join(self._serialize(e) for e in entries))
        logger.info(f"Appended {len(entries)} entries to {self.path}")
