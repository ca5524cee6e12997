"""Brute-force factorization oracle."""

from .enumerator import FactorizationOracle, count_for_target, factor_table
from .parallel import ParallelOracle

__all__ = ["FactorizationOracle", "ParallelOracle", "count_for_target", "factor_table"]
