"""
Monotone Hurwitz numbers by the cut / join recurrence.

M^r(beta) is evaluated by removing one part k of beta (the cycle holding the
largest element) and classifying the last transposition of the factorization:

    cut              sum_k' k' m_k'(alpha) M^{r-1}(alpha - {k'} + {k + k'})
    redundant join   sum_{k'=1}^{k-1} M^{r-1}(alpha + {k', k - k'})
    essential join   sum_{k'=1}^{k-1} sum_{r'} sum_{alpha' <= alpha}
                         M^{r'}(alpha' + {k'}) M^{r-1-r'}(alpha - alpha' + {k - k'})

with alpha = beta - {k}, sub-multisets alpha' weighted by labelled-part
multiplicity, and M^0(beta) = [beta = (1)].
"""

import logging
from typing import Dict, Literal, Optional

from ..core.exceptions import InvalidPartitionError
from ..exact.partitions import (
    Partition,
    class_size,
    has_genus,
    partitions_of,
    rh_transposition_count,
    sub_multisets,
)
from .memo import MemoTable

logger = logging.getLogger(__name__)

Peel = Literal["largest", "smallest"]

_SINGLETON = Partition((1,))


class MonotoneRecurrence:
    """
    Memoised evaluator of M^r(alpha) and the numbers derived from it.

    Peeling the largest part is the default; peeling the smallest part gives an
    independent evaluation order used for cross-checks.
    """

    def __init__(self, memo: Optional[MemoTable] = None, peel: Peel = "largest"):
        """
        Initialize recurrence.

        Args:
            memo: Memo table to read and fill (default: fresh in-memory table)
            peel: Which part of beta to remove first
        """
        self.memo = memo if memo is not None else MemoTable()
        self.peel = peel

    def M(self, alpha: Partition, r: int) -> int:
        """
        M^r(alpha), the monotone count per fixed permutation of type alpha.

        Raises:
            InvalidPartitionError: If alpha is empty
        """
        alpha = Partition(alpha)
        if alpha.weight < 1:
            raise InvalidPartitionError("monotone numbers need a partition of weight >= 1")
        return self._M(alpha, r)

    def _M(self, beta: Partition, r: int) -> int:
        if r < 0 or not has_genus(beta, r):
            return 0
        if r == 0:
            return 1 if beta == _SINGLETON else 0

        cached = self.memo.get(beta, r)
        if cached is not None:
            return cached

        value = self._expand(beta, r)
        self.memo.put(beta, r, value)
        return value

    def _expand(self, beta: Partition, r: int) -> int:
        k = beta[0] if self.peel == "largest" else beta[-1]
        alpha = beta.remove(k)
        s = r - 1

        cut = 0
        for part, m in alpha.multiplicities().items():
            cut += part * m * self._M(alpha.remove(part).union(k + part), s)

        redundant = 0
        essential = 0
        subs = sub_multisets(alpha)
        for split in range(1, k):
            redundant += self._M(alpha.union(split, k - split), s)
            for sub, multiplicity in subs:
                rest = alpha.remove(*sub)
                left = sub.union(split)
                right = rest.union(k - split)
                for r_left in range(s + 1):
                    a = self._M(left, r_left)
                    if a:
                        essential += multiplicity * a * self._M(right, s - r_left)

        return cut + redundant + essential

    def H(self, alpha: Partition, r: int) -> int:
        """Monotone Hurwitz number |C_alpha| M^r(alpha)."""
        alpha = Partition(alpha)
        return class_size(alpha) * self.M(alpha, r)

    def H_genus(self, alpha: Partition, g: int) -> int:
        """Genus-g monotone Hurwitz number, r fixed by Riemann-Hurwitz."""
        alpha = Partition(alpha)
        return self.H(alpha, rh_transposition_count(alpha, g))

    def genus_table(self, g: int, max_weight: int) -> Dict[Partition, int]:
        """H_g(alpha) for every alpha of weight 1..max_weight, in table order."""
        table = {}
        for d in range(1, max_weight + 1):
            for alpha in partitions_of(d):
                table[alpha] = self.H_genus(alpha, g)
        logger.debug("Genus %d table to weight %d; memo %s", g, max_weight, self.memo.stats())
        return table


def cross_check_peeling(alpha: Partition, r: int, memo: Optional[MemoTable] = None) -> bool:
    """Evaluate M^r(alpha) with both peeling orders on separate memos and compare."""
    largest = MonotoneRecurrence(memo, peel="largest").M(alpha, r)
    smallest = MonotoneRecurrence(MemoTable(), peel="smallest").M(alpha, r)
    if largest != smallest:
        logger.warning(
            "Peeling mismatch at (%s, %d): largest=%d smallest=%d",
            Partition(alpha).text(), r, largest, smallest
        )
    return largest == smallest
