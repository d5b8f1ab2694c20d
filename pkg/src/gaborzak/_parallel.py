"""Optional thread parallelism for grid sweeps.

``GFS_THREADS`` caps the worker count (default 1, i.e. serial).  Results are
always returned in input order, so reductions downstream are deterministic.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def max_threads() -> int:
    raw = os.environ.get("GFS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(func, items):
    items = list(items)
    workers = min(max_threads(), len(items))
    if workers <= 1:
        return [func(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
