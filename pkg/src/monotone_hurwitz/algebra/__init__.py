"""Group algebra of S_d and Jucys-Murphy elements."""

from .group_algebra import (
    GroupAlgebraElement,
    multiply,
    jm_element,
    class_sum,
    complete_homogeneous_jm,
    complete_homogeneous_rows,
    centrality_check,
    class_coefficient,
    rank_of,
    permutation_at,
)

__all__ = [
    "GroupAlgebraElement",
    "multiply",
    "jm_element",
    "class_sum",
    "complete_homogeneous_jm",
    "complete_homogeneous_rows",
    "centrality_check",
    "class_coefficient",
    "rank_of",
    "permutation_at",
]
