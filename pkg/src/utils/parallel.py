"""Ordered worker-pool helpers behind the `--jobs` option.

Results are always consumed in input order, so the merged answer never
depends on the number of workers or on completion order.
"""

import multiprocessing
from typing import Callable, Iterable, List, Optional, Sequence, TypeVar

from .logger import logger

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> List[R]:
    """Map func over items, in order, on up to `jobs` worker processes."""
    if jobs <= 1 or len(items) < 2:
        return [func(item) for item in items]

    workers = min(jobs, len(items))
    logger.debug(f"Dispatching {len(items)} tasks to {workers} workers")
    with multiprocessing.Pool(workers) as pool:
        return pool.map(func, items)


def first_hit(func: Callable[[T], Optional[R]], shards: Iterable[T], jobs: int = 1) -> Optional[R]:
    """Return the first non-None result in shard order (early exit)."""
    shards = list(shards)
    if jobs <= 1 or len(shards) < 2:
        for shard in shards:
            result = func(shard)
            if result is not None:
                return result
        return None

    workers = min(jobs, len(shards))
    logger.debug(f"Searching {len(shards)} shards on {workers} workers")
    with multiprocessing.Pool(workers) as pool:
        for result in pool.imap(func, shards):
            if result is not None:
                return result
    return None
