import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

_progress_enabled = False


def configure_progress(enabled: bool) -> None:
    """Turn tqdm progress bars on stderr on or off for every batch run"""
    global _progress_enabled
    _progress_enabled = enabled


def _run_chunk(fn: Callable[[T], R], chunk: Sequence[T]) -> List[R]:
    return [fn(item) for item in chunk]


def _chunks(items: Sequence[T], jobs: int, chunksize: Optional[int]) -> List[Sequence[T]]:
    size = chunksize or max(1, -(-len(items) // (jobs * 4)))
    return [items[i:i + size] for i in range(0, len(items), size)]


async def _gather(fn: Callable[[T], R], items: Sequence[T], jobs: int,
                  chunksize: Optional[int], desc: Optional[str]) -> List[R]:
    loop = asyncio.get_running_loop()
    chunks = _chunks(items, jobs, chunksize)
    with tqdm(total=len(items), desc=desc, disable=not _progress_enabled) as bar, \
            ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = []
        for chunk in chunks:
            future = loop.run_in_executor(pool, _run_chunk, fn, chunk)
            future.add_done_callback(lambda _, n=len(chunk): bar.update(n))
            futures.append(future)
        # gather returns results in submission order
        results = await asyncio.gather(*futures)
    return [result for chunk_results in results for result in chunk_results]


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1,
                 chunksize: Optional[int] = None, desc: Optional[str] = None) -> List[R]:
    """Apply `fn` to every item, in input order; `fn` must be picklable when jobs > 1"""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(item) for item in tqdm(items, desc=desc, disable=not _progress_enabled)]
    logger.debug("Dispatching %d items to %d worker processes", len(items), jobs)
    return asyncio.run(_gather(fn, items, jobs, chunksize, desc))
