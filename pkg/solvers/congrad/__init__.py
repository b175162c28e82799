"""Conjugate gradient backend with parabolic and exact line searches."""

from .line_search import exact_step, parabolic_step, sample_parabola, trial_spacing
from .solver import CGState, direction_update, fr_beta, solve_cg

__all__ = [
    "CGState",
    "direction_update",
    "exact_step",
    "fr_beta",
    "parabolic_step",
    "sample_parabola",
    "solve_cg",
    "trial_spacing",
]
