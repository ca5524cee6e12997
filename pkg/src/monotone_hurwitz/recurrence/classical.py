"""
Classical Hurwitz numbers from the join-cut equation.

Coefficients c(alpha, r) = H^r(alpha) / (d! r!) of the classical generating
function are produced one t-layer at a time. Reading off [t^r] of

    dH/dt = 1/2 sum_{i,j} ( (i+j) p_i p_j d/dp_{i+j}
                            + ij p_{i+j} d^2/dp_i dp_j
                            + ij p_{i+j} dH/dp_i dH/dp_j )

gives (r+1) c(., r+1) from the layers 0..r, starting from [t^0] H = p_1.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from math import factorial
from typing import Dict, List

from ..core.exceptions import InvalidPartitionError
from ..exact.arithmetic import as_integer
from ..exact.partitions import Partition, rh_transposition_count

logger = logging.getLogger(__name__)

Layer = Dict[Partition, Fraction]


def _cut(layer: Layer, out: Dict[Partition, Fraction]) -> None:
    """(i+j) p_i p_j d/dp_{i+j}, summed over ordered (i, j)."""
    for beta, c in layer.items():
        for n, m in beta.multiplicities().items():
            base = beta.remove(n)
            for i in range(1, n):
                out[base.union(i, n - i)] += c * m * n


def _join(layer: Layer, out: Dict[Partition, Fraction]) -> None:
    """ij p_{i+j} d^2/dp_i dp_j, summed over ordered (i, j)."""
    for beta, c in layer.items():
        counts = beta.multiplicities()
        for i, m_i in counts.items():
            for j, m_j in counts.items():
                if i == j:
                    weight = m_i * (m_i - 1)
                else:
                    weight = m_i * m_j
                if weight:
                    out[beta.remove(i, j).union(i + j)] += c * i * j * weight


def _derivative(layer: Layer, part: int) -> Layer:
    found: Layer = {}
    for beta, c in layer.items():
        m = beta.multiplicity(part)
        if m:
            found[beta.remove(part)] = c * m
    return found


def _quadratic(layers: List[Layer], r: int, max_weight: int, out: Dict[Partition, Fraction]) -> None:
    """[t^r] of ij p_{i+j} dH/dp_i dH/dp_j, summed over ordered (i, j)."""
    derivatives = [
        {i: _derivative(layers[s], i) for i in range(1, max_weight + 1)}
        for s in range(r + 1)
    ]
    for s in range(r + 1):
        for i in range(1, max_weight):
            left = derivatives[s][i]
            if not left:
                continue
            for j in range(1, max_weight - i + 1):
                right = derivatives[r - s][j]
                for beta1, c1 in left.items():
                    for beta2, c2 in right.items():
                        if beta1.weight + beta2.weight + i + j > max_weight:
                            continue
                        out[beta1.merge(beta2).union(i + j)] += i * j * c1 * c2


def next_layer(layers: List[Layer], max_weight: int) -> Layer:
    """Layer r+1 from layers 0..r."""
    r = len(layers) - 1
    rhs: Dict[Partition, Fraction] = defaultdict(Fraction)
    _cut(layers[r], rhs)
    _join(layers[r], rhs)
    _quadratic(layers, r, max_weight, rhs)
    return {beta: value / (2 * (r + 1)) for beta, value in rhs.items() if value}


class ClassicalJoinCut:
    """
    Layer cache for the classical join-cut equation.

    Layers hold every monomial of weight up to max_weight; asking for a
    heavier partition rebuilds them at the larger weight.
    """

    def __init__(self, max_weight: int = 1):
        self.max_weight = max_weight
        self.layers: List[Layer] = [{Partition((1,)): Fraction(1)}]

    def ensure(self, max_weight: int, r: int) -> None:
        if max_weight > self.max_weight:
            logger.debug("Rebuilding classical layers at weight %d", max_weight)
            self.max_weight = max_weight
            self.layers = self.layers[:1]
        while len(self.layers) <= r:
            self.layers.append(next_layer(self.layers, self.max_weight))

    def coefficient(self, alpha: Partition, r: int) -> Fraction:
        """c(alpha, r) = H^r(alpha) / (d! r!)."""
        alpha = Partition(alpha)
        self.ensure(alpha.weight, r)
        return self.layers[r].get(alpha, Fraction(0))

    def H(self, alpha: Partition, r: int) -> int:
        """
        Classical Hurwitz number H^r(alpha).

        Raises:
            InvalidPartitionError: If alpha is empty
        """
        alpha = Partition(alpha)
        if alpha.weight < 1:
            raise InvalidPartitionError("Hurwitz numbers need a partition of weight >= 1")
        if r < 0:
            return 0
        value = self.coefficient(alpha, r) * factorial(alpha.weight) * factorial(r)
        return as_integer(value, f"H^{r}({alpha.text()})")

    def H_genus(self, alpha: Partition, g: int) -> int:
        alpha = Partition(alpha)
        return self.H(alpha, rh_transposition_count(alpha, g))


def classical_H_joincut(alpha: Partition, r: int) -> int:
    """One-shot H^r(alpha) from a fresh layer cache."""
    return ClassicalJoinCut().H(alpha, r)
