"""
Permutations of the ground set {1, ..., d}.

Images are stored 0-based. Products compose left to right: in
t1 t2 ... tr = sigma the factor t1 is applied first, so
(sigma * tau)(i) = tau(sigma(i)).
"""

from itertools import permutations as _all_orders
from typing import Iterable, Iterator, Sequence, Tuple

from .partitions import Partition
from ..core.exceptions import InvalidPermutationError


class Permutation(tuple):
    """Image table of a bijection of {0, ..., d-1}."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutationError(f"not a bijection: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(d))

    @classmethod
    def transposition(cls, d: int, a: int, b: int) -> "Permutation":
        """The transposition (a b) on 1-based points a != b."""
        if not (1 <= a <= d and 1 <= b <= d) or a == b:
            raise InvalidPermutationError(f"invalid transposition ({a} {b}) in S_{d}")
        images = list(range(d))
        images[a - 1], images[b - 1] = b - 1, a - 1
        return cls(images)

    @classmethod
    def from_cycles(cls, d: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from 1-based cycles; unlisted points are fixed."""
        images = list(range(d))
        for cycle in cycles:
            for position, point in enumerate(cycle):
                images[point - 1] = cycle[(position + 1) % len(cycle)] - 1
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Left-to-right product: self first, then other."""
        return Permutation(other[i] for i in self)

    def inverse(self) -> "Permutation":
        images = [0] * len(self)
        for i, j in enumerate(self):
            images[j] = i
        return Permutation(images)

    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        """Disjoint cycles as 1-based tuples, fixed points included."""
        seen = [False] * len(self)
        found = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point + 1)
                point = self[point]
            found.append(tuple(cycle))
        return tuple(found)

    def cycle_count(self) -> int:
        return len(self.cycles())

    def rank(self) -> int:
        """d minus the number of cycles."""
        return len(self) - self.cycle_count()


def cycle_type(sigma: Permutation) -> Partition:
    """Sorted cycle-length multiset of sigma."""
    return Partition(len(cycle) for cycle in sigma.cycles())


def canonical_permutation(alpha: Partition) -> Permutation:
    """
    The fixed representative of C_alpha.

    Cycles are laid out consecutively, longest first, on the smallest labels:
    (3,1) gives (1 2 3)(4).
    """
    cycles = []
    start = 1
    for part in alpha:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(alpha.weight, cycles)


def permutations_of_type(alpha: Partition) -> Iterator[Permutation]:
    """Every permutation in the conjugacy class C_alpha."""
    for images in _all_orders(range(alpha.weight)):
        sigma = Permutation(images)
        if cycle_type(sigma) == alpha:
            yield sigma


def all_permutations(d: int) -> Iterator[Permutation]:
    """S_d in lexicographic order of image tables."""
    for images in _all_orders(range(d)):
        yield Permutation(images)


def is_transitive(generators: Iterable[Permutation], d: int) -> bool:
    """
    True iff the generated group has a single orbit on {1, ..., d}.

    Uses orbit union (disjoint sets) over the generator edges i -> g(i).
    """
    parent = list(range(d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = d
    for generator in generators:
        if len(generator) != d:
            raise InvalidPermutationError(f"generator acts on {len(generator)} points, expected {d}")
        for i, j in enumerate(generator):
            root_i, root_j = find(i), find(j)
            if root_i != root_j:
                parent[root_i] = root_j
                components -= 1
    return components <= 1
