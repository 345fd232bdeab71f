import asyncio
import logging
import traceback
from typing import Callable, Sequence, TypeVar

from scalar import Scalar, total

logger = logging.getLogger(__name__)

T = TypeVar("T")


async def sum_worker(
    fn: Callable[[T], Scalar],
    chunk: T,
    semaphore: asyncio.Semaphore,
) -> Scalar:
    """Worker task evaluating one chunk of an enumeration in a thread."""
    async with semaphore:
        return await asyncio.to_thread(fn, chunk)


async def gather_partial_sums(
    fn: Callable[[T], Scalar],
    chunks: Sequence[T],
    threads: int,
) -> list[Scalar]:
    """
    Evaluate every chunk concurrently, at most `threads` at a time.

    Partial sums are returned in chunk order, so adding them up gives the
    same exact value as a serial run.
    """
    semaphore = asyncio.Semaphore(threads)
    try:
        async with asyncio.TaskGroup() as tg:
            tasks = [
                tg.create_task(sum_worker(fn, chunk, semaphore), name=f"chunk_{i}")
                for i, chunk in enumerate(chunks)
            ]
    except* asyncio.CancelledError as cancel_exc:
        for exc in cancel_exc.exceptions:
            logger.info(f"Enumeration cancelled: {exc}")
        raise
    except* Exception as eg:
        for exc in eg.exceptions:
            logger.debug(f"Chunk worker error: {exc}\n{traceback.format_exc()}")
        raise
    return [task.result() for task in tasks]


def parallel_sum(
    fn: Callable[[T], Scalar],
    chunks: Sequence[T],
    threads: int = 1,
) -> Scalar:
    """Exact sum of fn over chunks; threads > 1 spreads the chunks over workers."""
    if threads <= 1 or len(chunks) <= 1:
        return total(fn(chunk) for chunk in chunks)
    logger.debug(f"Summing {len(chunks)} chunks on {threads} threads")
    try:
        partials = asyncio.run(gather_partial_sums(fn, chunks, threads))
    except BaseExceptionGroup as eg:
        first: BaseException = eg
        while isinstance(first, BaseExceptionGroup):
            first = first.exceptions[0]
        raise first from eg
    return total(partials)
