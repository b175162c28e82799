"""Lagrange-multiplier reformulation of the minimum-norm problem."""

from .functional import (
    MultiplierState,
    energy,
    energy_gradient,
    internal_from_multipliers,
    multipliers_from_internal,
    phi,
    phi_gradient,
    recover_x,
)
from .gram import (
    DEFAULT_EXPLICIT_THRESHOLD,
    GramOperator,
    gram_apply,
    gram_entry,
    gram_matrix,
)
from .report import BestResidualTracker, assemble_report

__all__ = [
    "BestResidualTracker",
    "DEFAULT_EXPLICIT_THRESHOLD",
    "GramOperator",
    "MultiplierState",
    "assemble_report",
    "energy",
    "energy_gradient",
    "gram_apply",
    "gram_entry",
    "gram_matrix",
    "internal_from_multipliers",
    "multipliers_from_internal",
    "phi",
    "phi_gradient",
    "recover_x",
]
