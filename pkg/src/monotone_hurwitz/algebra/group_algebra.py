"""
Group algebra of S_d with dense exact coefficients.

An element stores one exact coefficient per permutation in a numpy object
array. Permutations are ranked lexicographically by image table, which is the
order of their Lehmer codes; ranking a batch of permutations is a vectorised
base-d encoding followed by a binary search.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _all_orders
from math import factorial
from typing import Dict, Iterator, List, Tuple, Union

import numpy as np

from ..core.exceptions import (
    BoundExceededError,
    InputError,
    NonCentralElementError,
)
from ..core.models import HARD_LIMITS
from ..exact.partitions import Partition
from ..exact.permutations import Permutation, canonical_permutation, cycle_type

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _permutation_table(d: int) -> np.ndarray:
    """All d! image tables, one per row, in rank order."""
    table = np.array(list(_all_orders(range(d))), dtype=np.int64).reshape(factorial(d), d)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def _place_values(d: int) -> np.ndarray:
    return d ** np.arange(d - 1, -1, -1, dtype=np.int64)


@lru_cache(maxsize=None)
def _codes(d: int) -> np.ndarray:
    # lexicographic order makes the base-d codes strictly increasing
    return _permutation_table(d) @ _place_values(d)


def rank_rows(d: int, rows: np.ndarray) -> np.ndarray:
    """Ranks of a batch of image tables (one per row)."""
    return np.searchsorted(_codes(d), rows @ _place_values(d))


def rank_of(sigma: Permutation) -> int:
    """Position of sigma in the fixed ranking of S_d."""
    d = sigma.degree
    return int(rank_rows(d, np.array([sigma], dtype=np.int64).reshape(1, d))[0])


def permutation_at(d: int, rank: int) -> Permutation:
    return Permutation(_permutation_table(d)[rank])


@lru_cache(maxsize=None)
def _class_labels(d: int) -> Tuple[Partition, ...]:
    """Cycle type of every ranked permutation."""
    return tuple(cycle_type(Permutation(row)) for row in _permutation_table(d))


class GroupAlgebraElement:
    """
    Exact element of Q[S_d].

    Coefficients are a read-only object array of length d!.
    """

    __slots__ = ("d", "coefficients")

    def __init__(self, d: int, coefficients: np.ndarray):
        if d < 1:
            raise InputError(f"group algebra needs d >= 1, got {d}")
        coefficients = np.asarray(coefficients, dtype=object)
        if coefficients.shape != (factorial(d),):
            raise InputError(f"expected {factorial(d)} coefficients, got shape {coefficients.shape}")
        coefficients.setflags(write=False)
        self.d = d
        self.coefficients = coefficients

    @classmethod
    def zero(cls, d: int) -> "GroupAlgebraElement":
        return cls(d, np.zeros(factorial(d), dtype=object))

    @classmethod
    def unit(cls, d: int) -> "GroupAlgebraElement":
        return cls.from_terms(d, {Permutation.identity(d): 1})

    @classmethod
    def from_terms(cls, d: int, terms: Dict[Permutation, Scalar]) -> "GroupAlgebraElement":
        coefficients = np.zeros(factorial(d), dtype=object)
        for sigma, value in terms.items():
            if sigma.degree != d:
                raise InputError(f"{sigma} is not a permutation of {d} points")
            coefficients[rank_of(sigma)] += value
        return cls(d, coefficients)

    def coefficient(self, sigma: Permutation) -> Scalar:
        return self.coefficients[rank_of(sigma)]

    def support(self) -> Iterator[Tuple[Permutation, Scalar]]:
        """Nonzero terms in rank order."""
        for rank in np.flatnonzero(self.coefficients != 0):
            yield permutation_at(self.d, int(rank)), self.coefficients[rank]

    def _check_degree(self, other: "GroupAlgebraElement") -> None:
        if self.d != other.d:
            raise InputError(f"cannot combine elements of Q[S_{self.d}] and Q[S_{other.d}]")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check_degree(other)
        return GroupAlgebraElement(self.d, self.coefficients + other.coefficients)

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return multiply(self, other)

    def scale(self, factor: Scalar) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.d, self.coefficients * factor)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.d == other.d and bool(np.all(self.coefficients == other.coefficients))

    def __hash__(self):
        return hash((self.d, tuple(self.coefficients)))

    def __repr__(self) -> str:
        terms = sum(1 for _ in np.flatnonzero(self.coefficients != 0))
        return f"GroupAlgebraElement(d={self.d}, support={terms})"


def multiply(e: GroupAlgebraElement, f: GroupAlgebraElement) -> GroupAlgebraElement:
    """
    Convolution product (ef)(pi) = sum over sigma * tau = pi of e(sigma) f(tau).

    Products compose left to right, so sigma * tau sends i to tau(sigma(i)).
    For each sigma in the support of e the products sigma * tau over all tau
    are a column permutation of the permutation table.
    """
    e._check_degree(f)
    d = e.d
    table = _permutation_table(d)
    result = np.zeros(factorial(d), dtype=object)
    for rank in np.flatnonzero(e.coefficients != 0):
        sigma = table[rank]
        targets = rank_rows(d, table[:, sigma])
        result[targets] += e.coefficients[rank] * f.coefficients
    return GroupAlgebraElement(d, result)


def jm_element(d: int, i: int) -> GroupAlgebraElement:
    """
    J_i = (1 i) + (2 i) + ... + (i-1 i).

    Raises:
        InputError: If i is outside 1..d
    """
    if not 1 <= i <= d:
        raise InputError(f"Jucys-Murphy index {i} outside 1..{d}")
    return GroupAlgebraElement.from_terms(
        d, {Permutation.transposition(d, j, i): 1 for j in range(1, i)}
    )


def class_sum(alpha: Partition) -> GroupAlgebraElement:
    """C_alpha, the sum of all permutations of cycle type alpha."""
    d = alpha.weight
    labels = _class_labels(d)
    coefficients = np.array([1 if label == alpha else 0 for label in labels], dtype=object)
    return GroupAlgebraElement(d, coefficients)


def complete_homogeneous_jm(d: int, r: int, d_max: int = 8) -> GroupAlgebraElement:
    """h_r(J_1, ..., J_d)."""
    return complete_homogeneous_rows(d, r, d_max)[r]


def complete_homogeneous_rows(d: int, r: int, d_max: int = 8) -> List[GroupAlgebraElement]:
    """
    h_0, ..., h_r of J_1, ..., J_d by h(n, s) = h(n-1, s) + J_n h(n, s-1).

    One row h(n, 0..r) is kept at a time.

    Args:
        d: Ground-set size
        r: Degree
        d_max: Largest admissible d (array size d!)

    Raises:
        BoundExceededError: If d exceeds d_max or the hard limit
    """
    if d < 1 or r < 0:
        raise InputError(f"need d >= 1 and r >= 0, got d={d}, r={r}")
    if d > min(d_max, HARD_LIMITS["jm_d_max"]):
        raise BoundExceededError(f"group algebra of S_{d} exceeds the cap d <= {d_max}")

    logger.debug("Building h_%d of Jucys-Murphy elements in Q[S_%d]", r, d)
    row = [GroupAlgebraElement.unit(d)] + [GroupAlgebraElement.zero(d)] * r
    for n in range(2, d + 1):
        j_n = jm_element(d, n)
        for s in range(1, r + 1):
            row[s] = row[s] + multiply(j_n, row[s - 1])
    return row


def centrality_check(e: GroupAlgebraElement) -> bool:
    """True iff the coefficients are constant on every conjugacy class."""
    seen: Dict[Partition, Scalar] = {}
    for label, value in zip(_class_labels(e.d), e.coefficients):
        if seen.setdefault(label, value) != value:
            return False
    return True


def class_coefficient(e: GroupAlgebraElement, alpha: Partition, check: bool = True) -> Scalar:
    """
    The common coefficient of a central element on C_alpha.

    Raises:
        NonCentralElementError: If check is set and e is not central
    """
    if alpha.weight != e.d:
        raise InputError(f"{alpha.text()} is not a cycle type of S_{e.d}")
    if check and not centrality_check(e):
        raise NonCentralElementError(f"{e!r} is not central")
    return e.coefficient(canonical_permutation(alpha))
