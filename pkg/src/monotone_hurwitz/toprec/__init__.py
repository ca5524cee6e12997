"""Topological recursion for the l-point genus-g series."""

from .engine import CoeffTable, TopologicalRecursion, reconcile

__all__ = ["CoeffTable", "TopologicalRecursion", "reconcile"]
