"""
Sharded background execution on a Qt thread pool.

Shards run as QRunnable tasks; results come back in shard order so that every
merge (and every statistic built from it) is independent of the worker count.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, TypeVar

from PySide6.QtCore import QRunnable, QThreadPool

logger = logging.getLogger(__name__)

S = TypeVar("S")
R = TypeVar("R")


class ShardTask(QRunnable):
    """
    One shard of a sharded computation.

    Stores its result (or the exception it raised) in shared slots indexed by
    shard position instead of signalling, so no event loop is needed.
    """

    def __init__(self, index: int, func: Callable, shard, results: List, errors: Dict[int, BaseException]):
        """
        Initialize shard task.

        Args:
            index: Position of the shard in the merge order
            func: Function applied to the shard
            shard: Shard payload
            results: Result slots shared by all tasks
            errors: Exceptions raised by failed shards, keyed by index
        """
        super().__init__()
        self.setAutoDelete(False)
        self._index = index
        self._func = func
        self._shard = shard
        self._results = results
        self._errors = errors

    def run(self):
        """Execute the shard in a pool thread."""
        try:
            self._results[self._index] = self._func(self._shard)
        except BaseException as e:  # re-raised on the calling thread
            self._errors[self._index] = e


def run_sharded(
    func: Callable[[S], R],
    shards: Sequence[S],
    workers: int = 1,
    stop_when: Optional[Callable[[R], bool]] = None,
) -> List[R]:
    """
    Apply ``func`` to every shard and return the results in shard order.

    Args:
        func: Pure function of one shard
        shards: Shard payloads
        workers: Thread count; 1 runs inline on the calling thread
        stop_when: Results after the first one it accepts are dropped; inline
            runs never compute them

    Returns:
        ``[func(s) for s in shards]``, cut after the first accepted result

    Raises:
        The exception of the lowest-indexed failing shard before any accepted result
    """
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    if workers == 1 or len(shards) <= 1:
        inline: List[R] = []
        for shard in shards:
            inline.append(func(shard))
            if stop_when is not None and stop_when(inline[-1]):
                break
        return inline

    results: List[Optional[R]] = [None] * len(shards)
    errors: Dict[int, BaseException] = {}
    pool = QThreadPool()
    pool.setMaxThreadCount(workers)
    tasks = [ShardTask(i, func, shard, results, errors) for i, shard in enumerate(shards)]

    logger.debug("Running %d shards on %d workers", len(tasks), workers)
    for task in tasks:
        pool.start(task)
    pool.waitForDone()

    if stop_when is not None:
        for index, result in enumerate(results):
            if index in errors:
                break
            if stop_when(result):
                return results[:index + 1]  # type: ignore[return-value]
    if errors:
        raise errors[min(errors)]
    return results  # type: ignore[return-value]


def split_range(start: int, stop: int, parts: int) -> List[range]:
    """Split ``range(start, stop)`` into at most ``parts`` contiguous pieces."""
    total = max(0, stop - start)
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out: List[range] = []
    lo = start
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append(range(lo, hi))
        lo = hi
    return out
