"""Chunked work dispatch for the nogil kernels.

Work is split into at most ``workers`` contiguous chunks and results are
merged in chunk order by the caller. Because all merges are integer sums,
outputs do not depend on the number of workers or on scheduling. One shared
thread pool serves all calls; concurrency per call is bounded by the chunk
count, so a wider pool never over-parallelizes a request.
"""

from __future__ import annotations

import os
import threading
from concurrent.futures import ThreadPoolExecutor

import numpy as np

_pool: ThreadPoolExecutor | None = None
_pool_lock = threading.Lock()


def _shared_pool() -> ThreadPoolExecutor:
    global _pool
    if _pool is None:
        with _pool_lock:
            if _pool is None:
                _pool = ThreadPoolExecutor(
                    max_workers=max(4, (os.cpu_count() or 1) * 2),
                    thread_name_prefix="tipdecomp",
                )
    return _pool


def split_chunks(items: np.ndarray, workers: int) -> list[np.ndarray]:
    """Split into up to ``workers`` contiguous non-empty chunks."""
    if workers <= 1 or items.size <= 1:
        return [items] if items.size else []
    return [c for c in np.array_split(items, min(workers, items.size)) if c.size]


def map_chunks(fn, chunks: list, workers: int) -> list:
    """Apply ``fn`` to every chunk, concurrently when workers > 1.

    Results come back in chunk order regardless of completion order.
    """
    if not chunks:
        return []
    if workers <= 1 or len(chunks) == 1:
        return [fn(c) for c in chunks]
    futures = [_shared_pool().submit(fn, c) for c in chunks]
    return [f.result() for f in futures]
