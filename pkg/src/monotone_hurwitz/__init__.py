"""
Monotone Hurwitz Lab - exact monotone and classical Hurwitz numbers.

Computes monotone Hurwitz numbers by recurrence, closed formulas, brute-force
enumeration, Jucys-Murphy elements and the topological recursion, and checks
the generating-function equations they satisfy coefficient by coefficient.
"""

__version__ = "1.0.0"
__author__ = "Monotone Hurwitz Lab Team"

from .core.config import ConfigLoader
from .core.models import (
    EnumerationBounds,
    FactorizationMode,
    FactorizationQuery,
    FormulaReport,
    RunConfig,
    SuiteResult
)
from .exact.partitions import Partition
from .exact.permutations import Permutation
from .oracle.enumerator import FactorizationOracle
from .recurrence.memo import MemoTable
from .recurrence.monotone import MonotoneRecurrence
from .recurrence.classical import ClassicalJoinCut
from .series.partition_series import PartitionSeries
from .toprec.engine import TopologicalRecursion
from .verify.suites import SuiteRunner

__all__ = [
    "__version__",
    "ConfigLoader",
    "EnumerationBounds",
    "FactorizationMode",
    "FactorizationQuery",
    "FormulaReport",
    "RunConfig",
    "SuiteResult",
    "Partition",
    "Permutation",
    "FactorizationOracle",
    "MemoTable",
    "MonotoneRecurrence",
    "ClassicalJoinCut",
    "PartitionSeries",
    "TopologicalRecursion",
    "SuiteRunner",
]
