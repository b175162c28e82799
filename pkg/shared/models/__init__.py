"""Shared Pydantic models used across the solver packages."""

from .solve import (
    BestIterate,
    IterationObserver,
    IterationRecord,
    LineSearch,
    OracleComparison,
    SolveReport,
    SolverConfig,
    SolverMethod,
    Termination,
)

__all__ = [
    "BestIterate",
    "IterationObserver",
    "IterationRecord",
    "LineSearch",
    "OracleComparison",
    "SolveReport",
    "SolverConfig",
    "SolverMethod",
    "Termination",
]
