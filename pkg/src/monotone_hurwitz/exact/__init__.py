"""Exact arithmetic, partitions and permutations."""

from .arithmetic import rising, binomial, render_exact, parse_exact, as_integer
from .partitions import (
    Partition,
    Composition,
    partitions_of,
    partitions_up_to,
    class_size,
    aut_size,
    sub_multisets,
    rh_transposition_count,
    genus_of,
    has_genus,
)
from .permutations import (
    Permutation,
    cycle_type,
    canonical_permutation,
    permutations_of_type,
    is_transitive,
)

__all__ = [
    "rising",
    "binomial",
    "render_exact",
    "parse_exact",
    "as_integer",
    "Partition",
    "Composition",
    "partitions_of",
    "partitions_up_to",
    "class_size",
    "aut_size",
    "sub_multisets",
    "rh_transposition_count",
    "genus_of",
    "has_genus",
    "Permutation",
    "cycle_type",
    "canonical_permutation",
    "permutations_of_type",
    "is_transitive",
]
