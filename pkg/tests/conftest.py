"""Shared fixtures; puts src/ on the import path."""

import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from monotone_hurwitz.core.models import EnumerationBounds
from monotone_hurwitz.oracle.enumerator import FactorizationOracle
from monotone_hurwitz.recurrence.memo import MemoTable
from monotone_hurwitz.recurrence.monotone import MonotoneRecurrence


@pytest.fixture(scope="session")
def recurrence():
    """One memoised recurrence shared by the whole run."""
    return MonotoneRecurrence(MemoTable())


@pytest.fixture(scope="session")
def oracle():
    return FactorizationOracle(EnumerationBounds())


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: runs at full acceptance caps")
