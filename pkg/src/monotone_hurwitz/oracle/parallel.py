"""
Parallel enumeration.

Splits one query on its first factor and counts the branches in a process
pool, bounded by a semaphore. Branch counts are added in branch order, so the
result does not depend on completion order.
"""

import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Callable, List, Optional

from ..core.exceptions import ComputationError
from ..core.models import FactorizationQuery
from .enumerator import FactorizationOracle, count_branch

logger = logging.getLogger(__name__)


class ParallelOracle:
    """
    Runs oracle branches concurrently.

    Uses a process pool for the CPU-bound walks and an asyncio semaphore to
    cap the number of in-flight branches.
    """

    def __init__(self, oracle: FactorizationOracle, workers: int = 2):
        """
        Initialize parallel oracle.

        Args:
            oracle: Oracle holding the enumeration bounds
            workers: Maximum concurrent branches and pool size
        """
        self.oracle = oracle
        self.workers = workers
        self._semaphore = asyncio.Semaphore(workers)

    async def count(
        self,
        query: FactorizationQuery,
        executor: Optional[Executor] = None,
        progress_callback: Optional[Callable[[int, int], None]] = None
    ) -> int:
        """
        Count one query by fanning out its first-factor branches.

        Args:
            query: The factorization query
            executor: Pool to run branches in (default: a fresh process pool)
            progress_callback: Optional callback function (done, total)

        Returns:
            Exact count, identical to FactorizationOracle.count

        Raises:
            BoundExceededError: If the query exceeds the enumeration limits
            ComputationError: If any branch fails
        """
        self.oracle.check_bounds(query)
        branches = self.oracle.branches(query)
        if not branches:
            return self.oracle.count(query)

        owned = executor is None
        if owned:
            executor = ProcessPoolExecutor(max_workers=self.workers)
        try:
            done = [0]
            tasks = [
                self._count_branch(executor, query, first, done, len(branches), progress_callback)
                for first in branches
            ]
            results = await asyncio.gather(*tasks, return_exceptions=True)
        finally:
            if owned:
                executor.shutdown(wait=True)

        errors: List[str] = []
        total = 0
        for first, result in zip(branches, results):
            if isinstance(result, BaseException):
                errors.append(f"branch {first}: {result}")
            else:
                total += result

        if errors:
            raise ComputationError(
                f"Failed to enumerate {len(errors)} branches:\n" + "\n".join(errors)
            )

        logger.debug("Parallel count of %s over %d branches: %d", query.alpha.text(), len(branches), total)
        return total

    async def _count_branch(
        self,
        executor: Executor,
        query: FactorizationQuery,
        first: int,
        done: List[int],
        total: int,
        progress_callback: Optional[Callable[[int, int], None]]
    ) -> int:
        async with self._semaphore:
            loop = asyncio.get_running_loop()
            count = await loop.run_in_executor(executor, count_branch, query, first)
        done[0] += 1
        if progress_callback:
            progress_callback(done[0], total)
        return count
