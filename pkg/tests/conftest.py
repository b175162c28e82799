"""Shared pytest configuration for the solver test-suite."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))


@pytest.fixture(scope="session", autouse=True)
def _quiet_logging() -> None:
    from shared.observability import configure_logging

    configure_logging(service_name="tests", level="WARNING")


@pytest.fixture
def example_1a():
    from solvers.core import LinearSystem

    return LinearSystem.from_lists([[1, 1, 0], [0, 1, 1], [1, 0, 1]], [2, 2, 2])


@pytest.fixture
def example_2():
    from solvers.core import LinearSystem

    return LinearSystem.from_lists([[1, 1, 1], [1, 1, 1], [1, -1, 0]], [1, 1, 0])


@pytest.fixture
def example_3():
    from solvers.core import LinearSystem

    return LinearSystem.from_lists(
        [[1, 2, 4], [1, 4, 16], [1, 6, 36], [1, 8, 64]],
        [4.999, 9.001, 12.999, 17.001],
    )
