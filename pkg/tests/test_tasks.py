import asyncio
import threading
from fractions import Fraction

import pytest

from tasks import gather_partial_sums, parallel_sum


def harmonic(n: int) -> Fraction:
    return Fraction(1, n)


class TestGatherPartialSums:
    @pytest.mark.asyncio
    async def test_results_in_chunk_order(self):
        partials = await gather_partial_sums(lambda n: n * n, [3, 1, 2], threads=2)
        assert partials == [9, 1, 4]

    @pytest.mark.asyncio
    async def test_semaphore_bounds_concurrency(self):
        lock = threading.Lock()
        active = 0
        peak = 0

        def slow(n: int) -> int:
            nonlocal active, peak
            with lock:
                active += 1
                peak = max(peak, active)
            threading.Event().wait(0.01)
            with lock:
                active -= 1
            return n

        partials = await gather_partial_sums(slow, list(range(8)), threads=2)
        assert partials == list(range(8))
        assert peak <= 2

    @pytest.mark.asyncio
    async def test_worker_error_propagates(self):
        def failing(n: int) -> int:
            if n == 2:
                raise ZeroDivisionError("boom")
            return n

        with pytest.raises(ExceptionGroup) as info:
            await gather_partial_sums(failing, [1, 2, 3], threads=2)
        assert info.group_contains(ZeroDivisionError)


class TestParallelSum:
    def test_serial_and_parallel_agree(self):
        chunks = list(range(1, 21))
        serial = parallel_sum(harmonic, chunks)
        assert parallel_sum(harmonic, chunks, threads=4) == serial
        assert serial == sum(Fraction(1, n) for n in chunks)

    def test_empty(self):
        assert parallel_sum(harmonic, [], threads=4) == 0

    def test_unwraps_worker_errors(self):
        def failing(n: int) -> int:
            raise ValueError(f"bad chunk {n}")

        with pytest.raises(ValueError, match="bad chunk"):
            parallel_sum(failing, [1, 2, 3], threads=3)

    def test_no_running_loop_needed(self):
        assert asyncio.run(asyncio.to_thread(parallel_sum, harmonic, [1, 2], 2)) == Fraction(3, 2)
