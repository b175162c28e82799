"""Constants for the command-line surface."""

from __future__ import annotations

from shared.models import Termination

SERVICE_NAME = "lsq-solve"

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1

TERMINATION_EXIT_CODES: dict[Termination, int] = {
    Termination.CONVERGED: 0,
    Termination.MAX_PASSES: 2,
    Termination.FLAT_DIRECTION: 3,
    Termination.INCONSISTENT_ROW: 4,
}

__all__ = [
    "EXIT_OK",
    "EXIT_SUITE_FAILURE",
    "SERVICE_NAME",
    "TERMINATION_EXIT_CODES",
]
