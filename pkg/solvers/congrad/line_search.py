"""Step-length rules along a conjugate direction."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from shared.errors import FlatDirectionError, RejectedInputError
from solvers.core import FloatVector, norm2

__all__ = ["CURVATURE_FLOOR", "exact_step", "parabolic_step", "sample_parabola", "trial_spacing"]

CURVATURE_FLOOR = 1e-12


def parabolic_step(
    phi_minus: float, phi_center: float, phi_plus: float, delta: float
) -> float:
    """Return the stationary point of the parabola through three equispaced samples.

    The samples are the minimized functional at ``-delta``, ``0`` and
    ``+delta`` along the direction, so the step is measured in units of the
    direction vector.
    """

    if not (delta > 0.0 and math.isfinite(delta)):
        raise RejectedInputError(f"delta must be positive and finite, got {delta!r}")
    curvature = phi_minus - 2.0 * phi_center + phi_plus
    if not math.isfinite(curvature):
        raise FlatDirectionError(curvature, detail="non-finite samples along direction")
    if abs(curvature) <= CURVATURE_FLOOR * (1.0 + abs(phi_center)):
        raise FlatDirectionError(curvature)
    if curvature < 0.0:
        raise FlatDirectionError(
            curvature, detail="functional is concave along direction; no minimizer"
        )
    return (phi_minus - phi_plus) * delta / (2.0 * curvature)


def trial_spacing(position: FloatVector, direction: FloatVector, delta_scale: float) -> float:
    """Spacing so trial points sit ``delta_scale * (1 + |position|)`` away."""

    length = norm2(direction)
    if length == 0.0:
        raise FlatDirectionError(0.0, detail="search direction is zero")
    return delta_scale * (1.0 + norm2(position)) / length


def sample_parabola(
    evaluate: Callable[[float], float], delta: float
) -> tuple[float, float, float]:
    """Evaluate ``evaluate(t)`` at ``t = -delta, 0, +delta``."""

    return evaluate(-delta), evaluate(0.0), evaluate(delta)


def exact_step(
    gradient: FloatVector, direction: FloatVector, curvature: float, scale: float
) -> float:
    """Analytic minimizer ``-<g, d> / <d, [w] d>`` of a quadratic along ``d``.

    ``curvature`` is ``<d, [w] d>`` and ``scale`` the largest Gram diagonal
    entry; curvature below ``1e-12 * |d|^2 * scale`` is treated as flat.
    """

    floor = CURVATURE_FLOOR * float(np.dot(direction, direction)) * scale
    if not math.isfinite(curvature) or curvature <= floor:
        raise FlatDirectionError(curvature)
    return -float(np.dot(gradient, direction)) / curvature
