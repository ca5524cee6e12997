"""
Brute-force factorization counts.

Every count fixes the canonical permutation of the target cycle type and
walks factor tuples depth first. Two admissible prunings apply: the
remaining factors must be able to close the transposition distance to the
target, and to join the remaining orbits. Equal search states are counted
once, so every tuple is still counted exactly once without being visited.
"""

import logging
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from ..core.exceptions import BoundExceededError, InputError
from ..core.models import EnumerationBounds, FactorizationMode, FactorizationQuery
from ..exact.partitions import Partition, rh_transposition_count
from ..exact.permutations import (
    Permutation,
    all_permutations,
    canonical_permutation,
    permutations_of_type,
)

logger = logging.getLogger(__name__)

Images = Tuple[int, ...]


class Factor(NamedTuple):
    """One admissible factor: image table, rank, ordering key, orbit edges."""

    images: Images
    rank: int
    key: int
    edges: Tuple[Tuple[int, int], ...]


def _transposition_factors(d: int, keyed: bool) -> Tuple[Factor, ...]:
    factors = []
    # ordered by b, then a, so that monotone tuples are generated in b order
    for b in range(2, d + 1):
        for a in range(1, b):
            images = tuple(Permutation.transposition(d, a, b))
            factors.append(Factor(images, 1, b if keyed else 0, ((a - 1, b - 1),)))
    return tuple(factors)


def _permutation_factors(d: int) -> Tuple[Factor, ...]:
    factors = []
    for rho in all_permutations(d):
        edges = []
        for cycle in rho.cycles():
            edges.extend((cycle[i] - 1, cycle[i + 1] - 1) for i in range(len(cycle) - 1))
        factors.append(Factor(tuple(rho), rho.rank(), 0, tuple(edges)))
    return tuple(factors)


@lru_cache(maxsize=None)
def factor_table(mode: FactorizationMode, d: int) -> Tuple[Factor, ...]:
    """Factors admissible in one slot of a query of the given mode."""
    if mode is FactorizationMode.MONOTONE:
        return _transposition_factors(d, keyed=True)
    if mode is FactorizationMode.CLASSICAL:
        return _transposition_factors(d, keyed=False)
    return _permutation_factors(d)


def _distance(current: Images, target: Images) -> int:
    """Transposition distance from current to target: d - cycles(current^-1 target)."""
    d = len(current)
    inverse = [0] * d
    for i, j in enumerate(current):
        inverse[j] = i
    rest = [target[inverse[i]] for i in range(d)]
    seen = [False] * d
    cycles = 0
    for start in range(d):
        if seen[start]:
            continue
        cycles += 1
        point = start
        while not seen[point]:
            seen[point] = True
            point = rest[point]
    return d - cycles


def _canonical(labels: Sequence[int]) -> Images:
    """Orbit labels renumbered in order of first occurrence."""
    seen: Dict[int, int] = {}
    return tuple(seen.setdefault(label, len(seen)) for label in labels)


def _merge(labels: Images, edges: Sequence[Tuple[int, int]]) -> Images:
    """Join the orbits touched by edges; returns canonical labels."""
    if not edges:
        return labels
    labels = list(labels)
    for i, j in edges:
        li, lj = labels[i], labels[j]
        if li != lj:
            labels = [li if label == lj else label for label in labels]
    return _canonical(labels)


class _Search:
    """
    Depth-first walk over r-tuples of factors with product equal to target.

    Subtrees are counted once per state (partial product, orbit partition,
    slots left, rank budget, last key) and the last slot is closed by looking
    up the one factor that reaches the target.
    """

    def __init__(
        self,
        target: Images,
        slots: int,
        budget: int,
        factors: Sequence[Factor],
        transitive_only: bool
    ):
        self.target = target
        self.slots = slots
        self.factors = factors
        self.transitive_only = transitive_only
        self.budget = budget
        self._by_images = {factor.images: factor for factor in factors}
        self._seen: Dict[Tuple, int] = {}

    def run(self, prefix: Sequence[int] = ()) -> int:
        d = len(self.target)
        current: Images = tuple(range(d))
        labels: Images = tuple(range(d))
        budget = self.budget
        last_key = 0
        for index in prefix:
            factor = self.factors[index]
            if factor.key < last_key:
                return 0
            current = tuple(factor.images[x] for x in current)
            labels = _merge(labels, factor.edges)
            budget -= factor.rank
            last_key = factor.key
        if budget < 0:
            return 0
        return self._walk(current, labels, self.slots - len(prefix), budget, last_key)

    def _walk(self, current: Images, labels: Images, slots: int, budget: int, last_key: int) -> int:
        state = (current, labels, slots, budget, last_key)
        cached = self._seen.get(state)
        if cached is not None:
            return cached
        total = self._expand(current, labels, slots, budget, last_key)
        self._seen[state] = total
        return total

    def _expand(self, current: Images, labels: Images, slots: int, budget: int, last_key: int) -> int:
        components = max(labels) + 1
        distance = _distance(current, self.target)
        if distance > budget or (budget - distance) % 2:
            return 0
        if self.transitive_only and components - 1 > budget:
            return 0
        if slots == 0:
            if budget != 0:
                return 0
            if self.transitive_only and components != 1:
                return 0
            return 1
        if slots == 1:
            return self._close(current, labels, budget, last_key)

        total = 0
        for factor in self.factors:
            if factor.key < last_key or factor.rank > budget:
                continue
            total += self._walk(
                tuple(factor.images[x] for x in current),
                _merge(labels, factor.edges),
                slots - 1,
                budget - factor.rank,
                factor.key
            )
        return total

    def _close(self, current: Images, labels: Images, budget: int, last_key: int) -> int:
        # the last factor f satisfies f[current[i]] = target[i]
        needed = [0] * len(current)
        for i, j in enumerate(current):
            needed[j] = self.target[i]
        factor = self._by_images.get(tuple(needed))
        if factor is None or factor.key < last_key or factor.rank != budget:
            return 0
        if self.transitive_only and max(_merge(labels, factor.edges)) != 0:
            return 0
        return 1


def _rank_budget(query: FactorizationQuery) -> int:
    if query.mode is FactorizationMode.RANK_WEIGHTED:
        return rh_transposition_count(query.alpha, query.genus)
    return query.r


def count_for_target(
    target: Permutation,
    query: FactorizationQuery,
    prefix: Sequence[int] = ()
) -> int:
    """
    Count factorizations of one fixed permutation.

    Args:
        target: The product every counted tuple must reach
        query: Mode, factor count and transitivity requirement
        prefix: Indices into the factor table forced as the first factors

    Returns:
        Exact count (0 for parity or genus obstructions)
    """
    if query.mode is FactorizationMode.RANK_WEIGHTED and query.genus is None:
        raise InputError("rank-weighted queries need an explicit genus")
    factors = factor_table(query.mode, len(target))
    search = _Search(tuple(target), query.r, _rank_budget(query), factors, query.transitive_only)
    return search.run(prefix)


def count_branch(query: FactorizationQuery, first: int) -> int:
    """Count for the canonical target with the first factor fixed (pool worker entry)."""
    return count_for_target(canonical_permutation(query.alpha), query, (first,))


class FactorizationOracle:
    """
    Ground-truth enumerators for monotone, classical and rank-weighted counts.

    Every count is per fixed target permutation; multiply by the class size
    to obtain the Hurwitz number.
    """

    def __init__(self, bounds: Optional[EnumerationBounds] = None):
        """
        Initialize oracle.

        Args:
            bounds: Enumeration limits (default: EnumerationBounds())
        """
        self.bounds = bounds or EnumerationBounds()

    def check_bounds(self, query: FactorizationQuery) -> None:
        """
        Raises:
            BoundExceededError: If the query is beyond the configured limits
        """
        prefix = {
            FactorizationMode.MONOTONE: "monotone",
            FactorizationMode.CLASSICAL: "classical",
            FactorizationMode.RANK_WEIGHTED: "rank",
        }[query.mode]
        d_max = getattr(self.bounds, f"{prefix}_d_max")
        r_max = getattr(self.bounds, f"{prefix}_r_max")
        d = query.alpha.weight
        if d > d_max or query.r > r_max:
            raise BoundExceededError(
                f"{query.mode.value} enumeration of {query.alpha.text()} with r={query.r} "
                f"exceeds limits d <= {d_max}, r <= {r_max}"
            )

    def count(self, query: FactorizationQuery) -> int:
        """Dispatch a query on its mode."""
        self.check_bounds(query)
        logger.debug(
            "Enumerating %s factorizations of %s with r=%d",
            query.mode.value, query.alpha.text(), query.r
        )
        return count_for_target(canonical_permutation(query.alpha), query)

    def count_monotone(self, alpha: Partition, r: int, transitive_only: bool = True) -> int:
        """Monotone r-factorizations of the canonical permutation of type alpha."""
        query = FactorizationQuery(alpha=alpha, r=r, mode=FactorizationMode.MONOTONE,
                                   transitive_only=transitive_only)
        return self.count(query)

    def count_classical(self, alpha: Partition, r: int, transitive_only: bool = True) -> int:
        """Unrestricted transposition r-factorizations of the canonical permutation."""
        query = FactorizationQuery(alpha=alpha, r=r, mode=FactorizationMode.CLASSICAL,
                                   transitive_only=transitive_only)
        return self.count(query)

    def count_rank_factorizations(self, alpha: Partition, r: int, g: int) -> int:
        """
        Transitive r-tuples of arbitrary permutations whose ranks add up to
        d + l + 2g - 2. Identity factors are admitted (rank 0).
        """
        query = FactorizationQuery(alpha=alpha, r=r, mode=FactorizationMode.RANK_WEIGHTED, genus=g)
        return self.count(query)

    def class_independence_check(self, alpha: Partition, r: int) -> bool:
        """True iff every member of C_alpha has the same monotone count."""
        query = FactorizationQuery(alpha=alpha, r=r, mode=FactorizationMode.MONOTONE)
        self.check_bounds(query)
        values = {count_for_target(sigma, query) for sigma in permutations_of_type(query.alpha)}
        return len(values) == 1

    def branches(self, query: FactorizationQuery) -> List[int]:
        """Indices of first factors that can start a counted tuple."""
        if query.r == 0:
            return []
        return list(range(len(factor_table(query.mode, query.alpha.weight))))
