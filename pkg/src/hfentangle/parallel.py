"""Order-preserving map over an optional process pool."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def ordered_map(fn, items, jobs: int = 1) -> list:
    """``[fn(x) for x in items]``, spread over ``jobs`` processes when ``jobs > 1``.

    Results always come back in input order so output is deterministic.
    """
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunksize = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
