"""Gauss-Seidel relaxation on the multiplier system."""

from .solver import (
    RelaxationOutcome,
    SweepResult,
    relaxation_sweep,
    run_relaxation,
    solve_relaxation,
)

__all__ = [
    "RelaxationOutcome",
    "SweepResult",
    "relaxation_sweep",
    "run_relaxation",
    "solve_relaxation",
]
