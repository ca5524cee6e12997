"""Verification suites."""

from .suites import GOLDEN_GENUS, SuiteRunner, total_checks

__all__ = ["GOLDEN_GENUS", "SuiteRunner", "total_checks"]
