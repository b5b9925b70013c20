import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Iterable, Optional, TypeVar

from config.settings import THREADS

logger = logging.getLogger(__name__)

K = TypeVar("K")
V = TypeVar("V")


def map_by_key(
    fn: Callable[[K], V], keys: Iterable[K], max_workers: Optional[int] = None
) -> dict[K, V]:
    """Evaluate ``fn`` on every key in a thread pool; results keyed by input."""
    keys = list(keys)
    workers = min(max_workers or THREADS, len(keys))
    if workers <= 1:
        return {key: fn(key) for key in keys}

    results: dict[K, V] = {}
    with ThreadPoolExecutor(max_workers=workers) as executor:
        future_to_key = {executor.submit(fn, key): key for key in keys}
        for future in as_completed(future_to_key):
            results[future_to_key[future]] = future.result()
    logger.debug("computed %d results on %d workers", len(results), workers)
    return {key: results[key] for key in keys}
