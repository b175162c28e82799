"""Assembly of :class:`SolveReport` records from final multipliers."""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np
from numpy.typing import ArrayLike

from shared.models import BestIterate, SolveReport, SolverMethod, Termination
from solvers.core import FloatVector, LinearSystem, norm2, residual

from .functional import recover_x

__all__ = ["BestResidualTracker", "assemble_report"]


def _finite_or_inf(value: float) -> float:
    return value if math.isfinite(value) else math.inf


class BestResidualTracker:
    """Remember the iterate with the smallest residual norm seen so far."""

    __slots__ = ("x", "passes", "residual_norm", "internal")

    def __init__(self) -> None:
        self.x: FloatVector | None = None
        self.internal: FloatVector | None = None
        self.passes = 0
        self.residual_norm = math.inf

    def offer(
        self,
        passes: int,
        x: FloatVector,
        residual_norm: float,
        internal: FloatVector | None = None,
    ) -> None:
        if residual_norm < self.residual_norm:
            self.residual_norm = residual_norm
            self.passes = passes
            self.x = x.copy()
            self.internal = None if internal is None else internal.copy()

    def as_model(self) -> BestIterate | None:
        if self.x is None:
            return None
        return BestIterate(
            x=tuple(self.x.tolist()),
            passes=self.passes,
            residual_norm=self.residual_norm,
        )


def assemble_report(
    system: LinearSystem,
    *,
    method: SolverMethod,
    multipliers: ArrayLike,
    passes: int,
    termination: Termination,
    gradient_norm: float,
    best: BestResidualTracker | None = None,
    inconsistent_rows: Iterable[int] = (),
) -> SolveReport:
    """Recover ``x`` from ``multipliers`` and recompute the report norms.

    The best-residual block is attached only when the solve did not converge.
    """

    lam = np.asarray(multipliers, dtype=np.float64)
    x = recover_x(system.matrix, lam)
    residual_norm = math.inf
    if np.all(np.isfinite(x)):
        residual_norm = _finite_or_inf(norm2(residual(system, x)))
    best_model = None
    if best is not None and termination is not Termination.CONVERGED:
        best_model = best.as_model()
    return SolveReport(
        method=method,
        x=tuple(x.tolist()),
        multipliers=tuple(lam.tolist()),
        residual_norm=residual_norm,
        solution_norm=_finite_or_inf(norm2(x)),
        passes=passes,
        termination=termination,
        gradient_norm=_finite_or_inf(gradient_norm),
        best_residual=best_model,
        inconsistent_rows=tuple(sorted(set(int(row) for row in inconsistent_rows))),
    )
