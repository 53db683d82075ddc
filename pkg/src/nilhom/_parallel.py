import os
from concurrent.futures import ProcessPoolExecutor


def default_workers() -> int:
    env = os.environ.get("NILHOM_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def slice_map(fn, items, workers: int = 1):
    """``[fn(x) for x in items]``, fanned out over processes when ``workers > 1``.

    ``fn`` must be a picklable top-level callable (or a ``functools.partial`` of one).
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
