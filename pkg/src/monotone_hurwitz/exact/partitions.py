"""
Integer partitions and compositions.

A Partition is a canonical (non-increasing) tuple of positive parts. It is
the universal index for cycle types, memo keys and series monomials, so it
subclasses ``tuple`` to stay hashable and cheap.
"""

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, List, Tuple

from sympy.utilities.iterables import partitions as sympy_partitions

from .arithmetic import binomial
from ..core.exceptions import InvalidPartitionError, NoGenusError


class Partition(tuple):
    """
    Non-increasing tuple of positive integers.

    The empty partition (d = 0, l = 0) is a valid value.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise InvalidPartitionError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        Parse the comma-separated text form, in any order.

        Args:
            text: e.g. "3,2,2,1" or "1,2"

        Raises:
            InvalidPartitionError: On empty fields or non-integer parts
        """
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(field) for field in text.split(",")]
        except ValueError:
            raise InvalidPartitionError(f"cannot parse partition {text!r}")
        return cls(parts)

    @property
    def weight(self) -> int:
        """d, the sum of the parts."""
        return sum(self)

    @property
    def length(self) -> int:
        """l, the number of parts."""
        return len(self)

    def multiplicity(self, k: int) -> int:
        """m_k, the number of parts equal to k."""
        return self.count(k)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def union(self, *parts: int) -> "Partition":
        """alpha with extra parts added."""
        return Partition(tuple(self) + parts)

    def merge(self, other: Iterable[int]) -> "Partition":
        """Multiset union with another partition."""
        return Partition(tuple(self) + tuple(other))

    def remove(self, *parts: int) -> "Partition":
        """alpha with one copy of each given part removed."""
        remaining = list(self)
        for part in parts:
            try:
                remaining.remove(part)
            except ValueError:
                raise InvalidPartitionError(f"{part} is not a part of {self.text()}")
        return Partition(remaining)

    def text(self) -> str:
        """Canonical comma-separated text form."""
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({self.text()})"


class Composition(tuple):
    """Ordered tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise InvalidPartitionError(f"composition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    def to_partition(self) -> Partition:
        return Partition(self)


@lru_cache(maxsize=None)
def partitions_of(d: int) -> Tuple[Partition, ...]:
    """
    All partitions of d in reverse-lexicographic order.

    For d = 3 this is (3), (2,1), (1,1,1). d = 0 yields the empty partition.
    """
    if d < 0:
        return ()
    if d == 0:
        return (Partition(),)
    found = []
    for counts in sympy_partitions(d):
        # sympy reuses the dict between iterations
        found.append(Partition(part for part, m in counts.items() for _ in range(m)))
    return tuple(sorted(found, reverse=True))


def partitions_up_to(max_weight: int, min_weight: int = 1) -> Iterator[Partition]:
    """Partitions ordered by weight, then reverse-lexicographically."""
    for d in range(min_weight, max_weight + 1):
        yield from partitions_of(d)


@lru_cache(maxsize=None)
def class_size(alpha: Partition) -> int:
    """|C_alpha| = d! / prod_j j^{m_j} m_j!."""
    denominator = 1
    for part, m in Counter(alpha).items():
        denominator *= part ** m * factorial(m)
    return factorial(sum(alpha)) // denominator


@lru_cache(maxsize=None)
def aut_size(alpha: Partition) -> int:
    """|Aut alpha| = prod_k m_k!."""
    return prod(factorial(m) for m in Counter(alpha).values())


@lru_cache(maxsize=None)
def sub_multisets(alpha: Partition) -> Tuple[Tuple[Partition, int], ...]:
    """
    Sub-multisets of alpha with labelled-part multiplicities.

    Each alpha' is listed once with weight prod_k C(m_k(alpha), m_k(alpha'));
    the weights sum to 2^l(alpha).
    """
    counts = sorted(Counter(alpha).items(), reverse=True)
    result = []
    for choice in product(*(range(m + 1) for _, m in counts)):
        weight = 1
        parts: List[int] = []
        for (part, m), taken in zip(counts, choice):
            weight *= binomial(m, taken)
            parts.extend([part] * taken)
        result.append((Partition(parts), weight))
    return tuple(result)


def rh_transposition_count(alpha: Partition, g: int) -> int:
    """Riemann-Hurwitz: r = d + l + 2g - 2."""
    if g < 0:
        raise NoGenusError(f"genus must be non-negative, got {g}")
    return alpha.weight + alpha.length + 2 * g - 2


def genus_of(alpha: Partition, r: int) -> int:
    """
    Inverse of :func:`rh_transposition_count`.

    Raises:
        NoGenusError: On parity mismatch or negative genus
    """
    twice_genus = r - alpha.weight - alpha.length + 2
    if twice_genus % 2 != 0:
        raise NoGenusError(f"r={r} has the wrong parity for {alpha.text()}")
    if twice_genus < 0:
        raise NoGenusError(f"r={r} is below the genus-zero count for {alpha.text()}")
    return twice_genus // 2


def has_genus(alpha: Partition, r: int) -> bool:
    try:
        genus_of(alpha, r)
    except NoGenusError:
        return False
    return True
