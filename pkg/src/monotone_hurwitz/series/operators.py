"""
Differential and catalyst operators on PartitionSeries.

    D        sum_k k p_k d/dp_k           (scales p_alpha by |alpha|)
    D_k      p_k d/dp_k                   (scales p_alpha by m_k(alpha))
    lift     sum_k k x_i^k d/dp_k         (mark a cycle by x_i)
    second_lift  sum_{j,k} jk x_i^{j+k} d^2/dp_j dp_k
    project  [x_i^0] + sum_k p_k [x_i^k]  (forget the mark)
    split    x_i^k -> sum_{a=1}^{k-1} x_i^{k-a} x_j^a
"""

from typing import Iterator, Optional, Tuple

from ..core.exceptions import SlotMisuseError
from ..exact.partitions import Partition
from .partition_series import Caps, Exponents, Key, PartitionSeries


def diff_operator_D(series: PartitionSeries, k: Optional[int] = None) -> PartitionSeries:
    """D (k None) or D_k applied to series."""
    if k is None:
        return series.map_terms(lambda alpha, r, e, c: iter([((alpha, r, e), c * alpha.weight)]))
    return series.map_terms(lambda alpha, r, e, c: iter([((alpha, r, e), c * alpha.multiplicity(k))]))


def dp(series: PartitionSeries, k: int) -> PartitionSeries:
    """d/dp_k."""
    def action(alpha, r, e, c):
        m = alpha.multiplicity(k)
        if m:
            yield (alpha.remove(k), r, e), c * m
    return series.map_terms(action)


def times_p(series: PartitionSeries, k: int, caps: Optional[Caps] = None) -> PartitionSeries:
    """Multiplication by p_k, truncated to caps (default: the series' own)."""
    return series.map_terms(lambda alpha, r, e, c: iter([((alpha.union(k), r, e), c)]), caps=caps)


def _insert(slots: Tuple[int, ...], slot: int) -> Tuple[Tuple[int, ...], int]:
    """Slots with one more entry, and the position it lands at."""
    new_slots = tuple(sorted(slots + (slot,)))
    return new_slots, new_slots.index(slot)


def _with_exponent(e: Exponents, position: int, value: int) -> Exponents:
    return e[:position] + (value,) + e[position:]


def lift(series: PartitionSeries, i: int) -> PartitionSeries:
    """
    Delta_i = sum_k k x_i^k d/dp_k.

    Raises:
        SlotMisuseError: If slot i is already in use
    """
    if i in series.slots:
        raise SlotMisuseError(f"lift needs catalyst slot {i} unused, series uses {series.slots}")
    slots, position = _insert(series.slots, i)

    def action(alpha: Partition, r: int, e: Exponents, c) -> Iterator[Tuple[Key, object]]:
        for k, m in alpha.multiplicities().items():
            yield (alpha.remove(k), r, _with_exponent(e, position, k)), c * k * m

    return series.map_terms(action, slots=slots)


def second_lift(series: PartitionSeries, i: int) -> PartitionSeries:
    """
    Delta_i^2 = sum_{j,k} jk x_i^{j+k} d^2/dp_j dp_k over ordered (j, k).

    Raises:
        SlotMisuseError: If slot i is already in use
    """
    if i in series.slots:
        raise SlotMisuseError(f"second lift needs catalyst slot {i} unused, series uses {series.slots}")
    slots, position = _insert(series.slots, i)

    def action(alpha, r, e, c):
        counts = alpha.multiplicities()
        for j, m_j in counts.items():
            for k, m_k in counts.items():
                weight = m_j * (m_j - 1) if j == k else m_j * m_k
                if weight:
                    yield (alpha.remove(j, k), r, _with_exponent(e, position, j + k)), c * j * k * weight

    return series.map_terms(action, slots=slots)


def project(series: PartitionSeries, i: int) -> PartitionSeries:
    """
    Pi_i: x_i^k -> p_k for k >= 1, x_i^0 kept.

    On a series that does not use slot i this is the identity.
    """
    if i not in series.slots:
        return series
    position = series.slots.index(i)
    slots = series.slots[:position] + series.slots[position + 1:]

    def action(alpha, r, e, c):
        k = e[position]
        rest = e[:position] + e[position + 1:]
        yield (alpha.union(k) if k else alpha, r, rest), c

    return series.map_terms(action, slots=slots)


def split(series: PartitionSeries, i: int, j: int) -> PartitionSeries:
    """
    Split_{i->j}: x_i^k -> sum_{a=1}^{k-1} x_i^{k-a} x_j^a.

    Terms free of x_i are annihilated.

    Raises:
        SlotMisuseError: If slot i is unused or slot j is in use
    """
    if i not in series.slots:
        raise SlotMisuseError(f"split needs catalyst slot {i} in use, series uses {series.slots}")
    if j in series.slots:
        raise SlotMisuseError(f"split needs catalyst slot {j} unused, series uses {series.slots}")
    slots, position_j = _insert(series.slots, j)
    position_i = slots.index(i)
    source_i = series.slots.index(i)

    def action(alpha, r, e, c):
        k = e[source_i]
        widened = list(_with_exponent(e, position_j, 0))
        for a in range(1, k):
            widened[position_i] = k - a
            widened[position_j] = a
            yield (alpha, r, tuple(widened)), c

    return series.map_terms(action, slots=slots)


def cut_operator(series: PartitionSeries) -> PartitionSeries:
    """sum_{i,j} (i+j) p_i p_j d/dp_{i+j}."""
    max_weight = series.caps.max_weight
    result = PartitionSeries.zero(series.caps, series.slots)
    for n in range(2, max_weight + 1):
        derivative = dp(series, n)
        if derivative.is_zero():
            continue
        for i in range(1, n):
            result = result + times_p(times_p(derivative, i), n - i).scale(n)
    return result


def join_operator(series: PartitionSeries) -> PartitionSeries:
    """sum_{i,j} ij p_{i+j} d^2/dp_i dp_j."""
    max_weight = series.caps.max_weight
    result = PartitionSeries.zero(series.caps, series.slots)
    for i in range(1, max_weight):
        first = dp(series, i)
        if first.is_zero():
            continue
        for j in range(1, max_weight - i + 1):
            second = dp(first, j)
            if not second.is_zero():
                result = result + times_p(second, i + j).scale(i * j)
    return result


def quadratic_operator(left: PartitionSeries, right: PartitionSeries) -> PartitionSeries:
    """sum_{i,j} ij p_{i+j} (d left/dp_i)(d right/dp_j)."""
    caps = left.caps.meet(right.caps)
    result = PartitionSeries.zero(caps, left.slots)
    for i in range(1, caps.max_weight):
        first = dp(left, i)
        if first.is_zero():
            continue
        for j in range(1, caps.max_weight - i + 1):
            second = dp(right, j)
            if second.is_zero():
                continue
            inner = caps._replace(max_weight=caps.max_weight - i - j)
            product = first.with_caps(inner) * second.with_caps(inner)
            result = result + times_p(product, i + j, caps).scale(i * j)
    return result
