"""
Sweep execution: per-prime work fans out over a process pool and comes
back in ascending p. Only the parent process touches the cache.
"""

import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Sequence, Tuple

from ..bounds.models import BoundId, BoundReport
from ..bounds.verify import verify_prime
from ..classnumber.kummer import compute_hminus
from ..config.models import RunConfig
from ..lfunc.siegel import siegel_scan
from ..storage.cache import ResultCache
from ..storage.export import scan_row
from ..storage.models import CacheEntry, EntryKind
from ..utils.logger import get_logger

logger = get_logger(__name__)


def hminus_task(p: int, config_data: Dict[str, Any], method: Any = None) -> Dict[str, Any]:
    config = RunConfig(**config_data)
    record = compute_hminus(p, method, config.precision, config.oracle_ceiling)
    return record.to_dict()


def siegel_task(p: int, config_data: Dict[str, Any]) -> Dict[str, Any]:
    config = RunConfig(**config_data)
    report = siegel_scan(p, config.c_for(), config.prec, config.euler_maclaurin(), config.precision)
    return report.to_dict()


def scan_task(p: int, config_data: Dict[str, Any]) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    return hminus_task(p, config_data), siegel_task(p, config_data)


def verify_task(bound_id: str, p: int, config_data: Dict[str, Any]) -> List[Dict[str, Any]]:
    reports = verify_prime(BoundId(bound_id), p, RunConfig(**config_data))
    return [r.to_dict() for r in reports]


async def fan_out(task: Callable, calls: Sequence[Tuple], workers: int) -> List[Any]:
    """Run ``task(*args)`` for each call; results keep the order of ``calls``."""
    if workers <= 1 or len(calls) <= 1:
        return [task(*args) for args in calls]
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [loop.run_in_executor(pool, task, *args) for args in calls]
        return list(await asyncio.gather(*futures))


async def run_scan(primes: Sequence[int], config: RunConfig, cache: ResultCache) -> List[Dict[str, Any]]:
    """
    h_p^- and the Siegel report for every prime, reusing cache entries
    computed under the same config fingerprint.
    """
    fingerprint = config.fingerprint()
    primes = sorted(set(primes))
    todo = [
        p for p in primes
        if cache.lookup(EntryKind.HMINUS, p, fingerprint) is None
        or cache.lookup(EntryKind.SIEGEL, p, fingerprint) is None
    ]
    logger.info(f"scan: {len(primes)} primes, {len(todo)} to compute")

    data = config.model_dump()
    results = await fan_out(scan_task, [(p, data) for p in todo], config.workers)
    entries = []
    for p, (record, siegel) in zip(todo, results):
        entries.append(CacheEntry(kind=EntryKind.HMINUS, p=p, payload=record, config_fingerprint=fingerprint))
        entries.append(CacheEntry(kind=EntryKind.SIEGEL, p=p, payload=siegel, config_fingerprint=fingerprint))
    await cache.append_many(entries)

    rows = []
    for p in primes:
        record = cache.lookup(EntryKind.HMINUS, p, fingerprint)
        siegel = cache.lookup(EntryKind.SIEGEL, p, fingerprint)
        rows.append(scan_row(record.payload, siegel.payload))
    return rows


async def run_siegel(primes: Sequence[int], config: RunConfig, cache: ResultCache) -> List[Dict[str, Any]]:
    fingerprint = config.fingerprint()
    primes = sorted(set(primes))
    todo = [p for p in primes if cache.lookup(EntryKind.SIEGEL, p, fingerprint) is None]
    data = config.model_dump()
    results = await fan_out(siegel_task, [(p, data) for p in todo], config.workers)
    await cache.append_many([
        CacheEntry(kind=EntryKind.SIEGEL, p=p, payload=payload, config_fingerprint=fingerprint)
        for p, payload in zip(todo, results)
    ])
    return [cache.lookup(EntryKind.SIEGEL, p, fingerprint).payload for p in primes]


async def run_verify(bound_id: BoundId, primes: Sequence[int], config: RunConfig) -> List[BoundReport]:
    primes = sorted(set(primes))
    data = config.model_dump()
    logger.info(f"verify {bound_id}: {len(primes)} primes on {config.workers} worker(s)")
    batches = await fan_out(verify_task, [(bound_id.value, p, data) for p in primes], config.workers)
    return [BoundReport.from_dict(item) for batch in batches for item in batch]
