"""Memoised recurrences for monotone and classical Hurwitz numbers."""

from .memo import MemoTable
from .monotone import MonotoneRecurrence, cross_check_peeling
from .classical import ClassicalJoinCut, classical_H_joincut

__all__ = [
    "MemoTable",
    "MonotoneRecurrence",
    "cross_check_peeling",
    "ClassicalJoinCut",
    "classical_H_joincut",
]
