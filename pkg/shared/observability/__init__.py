"""Observability utilities shared across the solver packages."""

from .logger import (
    configure_logging,
    generate_run_id,
    get_logger,
    get_run_id,
    solve_context,
)

__all__ = [
    "configure_logging",
    "generate_run_id",
    "get_logger",
    "get_run_id",
    "solve_context",
]
