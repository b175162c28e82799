"""Coordinate-by-coordinate (Gauss-Seidel) minimization of the multiplier functional."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.typing import ArrayLike

from shared.models import (
    IterationObserver,
    IterationRecord,
    SolveReport,
    SolverConfig,
    SolverMethod,
    Termination,
)
from shared.errors import RejectedInputError
from shared.observability import get_logger
from solvers.core import FloatVector, LinearSystem, as_vector, norm2
from solvers.lagrange import (
    BestResidualTracker,
    GramOperator,
    MultiplierState,
    assemble_report,
    energy,
    energy_gradient,
)

__all__ = [
    "RelaxationOutcome",
    "SweepResult",
    "relaxation_sweep",
    "run_relaxation",
    "solve_relaxation",
]

logger = get_logger(__name__)


class SweepResult(NamedTuple):
    """State after one pass, its change sum in lambda units and skipped rows."""

    state: MultiplierState
    change_sum: float
    flagged_rows: tuple[int, ...]


@dataclass(frozen=True)
class RelaxationOutcome:
    """Final multipliers plus the facts needed to build a report."""

    state: MultiplierState
    change_sum: float
    termination: Termination
    best: BestResidualTracker
    inconsistent_rows: tuple[int, ...] = ()


def _row_sweep(
    mu: FloatVector,
    gram: GramOperator,
    rhs: FloatVector,
    b: FloatVector,
    tolerance: float,
    x: FloatVector | None = None,
) -> tuple[float, list[int]]:
    """Update ``mu`` in place for k = 0..M-1.

    Each update is ``mu_k <- (rhs_k - sum_{m != k} w_km mu_m) / w_kk`` using the
    values already updated in this pass. Without an explicit Gram matrix the
    products ``(w mu)_k`` come from ``a_k . x`` with ``x = A^t mu`` kept
    current, which ``x`` (when given) must equal on entry.

    Returns the mu change sum and the skipped zero rows with a non-zero ``b_k``.
    """

    diagonal = gram.diagonal
    flagged: list[int] = []
    change = 0.0

    if gram.explicit is not None:
        weights = gram.explicit.array
        for k in range(gram.size):
            w_kk = diagonal[k]
            if w_kk == 0.0:
                if abs(b[k]) > tolerance:
                    flagged.append(k)
                continue
            old = mu[k]
            new = (rhs[k] - (weights[k] @ mu - w_kk * old)) / w_kk
            delta = new - old
            mu[k] = new
            change += abs(delta)
        return change, flagged

    rows = gram.source.array
    current = rows.T @ mu if x is None else x.copy()
    for k in range(gram.size):
        w_kk = diagonal[k]
        if w_kk == 0.0:
            if abs(b[k]) > tolerance:
                flagged.append(k)
            continue
        a_k = rows[k]
        old = mu[k]
        new = (rhs[k] - (a_k @ current - w_kk * old)) / w_kk
        delta = new - old
        mu[k] = new
        current += delta * a_k
        change += abs(delta)
    return change, flagged


def _project_rhs_sweep(
    z: FloatVector, columns: FloatVector, column_norms: FloatVector
) -> None:
    """One column-relaxation pass driving ``z`` toward the part of b outside range(A)."""

    for j in range(columns.shape[0]):
        norm_sq = column_norms[j]
        if norm_sq == 0.0:
            continue
        column = columns[j]
        z -= (column @ z / norm_sq) * column


def relaxation_sweep(
    state: MultiplierState,
    gram: GramOperator,
    b: ArrayLike,
    *,
    tolerance: float = 1e-10,
) -> SweepResult:
    """Perform one in-order Gauss-Seidel pass over all multipliers.

    ``change_sum`` is reported in lambda units (twice the mu change sum). Rows
    with ``w_kk == 0`` keep their multiplier; those whose ``|b_k|`` exceeds
    ``tolerance`` are returned in ``flagged_rows``.
    """

    rhs = as_vector(b, gram.size, name="b")
    if state.size != gram.size:
        raise RejectedInputError(
            f"lambda has length {state.size}, expected {gram.size}",
            extensions={"expected": gram.size, "actual": state.size},
        )
    mu = state.internal.copy()
    change, flagged = _row_sweep(mu, gram, rhs, rhs, tolerance)
    return SweepResult(
        MultiplierState.from_internal(mu, state.passes + 1),
        2.0 * change,
        tuple(flagged),
    )


def run_relaxation(
    system: LinearSystem,
    config: SolverConfig,
    *,
    observer: IterationObserver | None = None,
) -> RelaxationOutcome:
    """Sweep from ``lambda = 0`` until the change sum drops below tolerance."""

    A = system.matrix
    b = system.rhs
    gram = GramOperator.build(A, explicit_threshold=config.gram_explicit_threshold)
    tolerance = config.tolerance
    interval = config.progress_interval

    mu = np.zeros(A.rows, dtype=np.float64)
    x = np.zeros(A.cols, dtype=np.float64)
    rhs = b
    z: FloatVector | None = None
    columns = column_norms = None
    if config.project_rhs:
        columns = np.ascontiguousarray(A.array.T)
        column_norms = np.einsum("ij,ij->i", columns, columns)
        z = b.copy()

    tracker = BestResidualTracker()
    flagged: set[int] = set()
    termination = Termination.MAX_PASSES
    change_sum = math.inf
    passes = 0

    logger.info(
        "relaxation_started",
        rows=A.rows,
        cols=A.cols,
        explicit_gram=gram.is_explicit,
        project_rhs=config.project_rhs,
        tolerance=tolerance,
        max_passes=config.max_passes,
    )

    for passes in range(1, config.max_passes + 1):
        if z is not None:
            _project_rhs_sweep(z, columns, column_norms)
            rhs = b - z
        change, rows = _row_sweep(mu, gram, rhs, b, tolerance, x)
        flagged.update(rows)
        change_sum = 2.0 * change

        x = A.array.T @ mu
        residual_norm = norm2(A.array @ x - b)
        tracker.offer(passes, x, residual_norm, mu)

        if observer is not None:
            observer(
                IterationRecord(
                    passes=passes,
                    energy=energy(gram, rhs, mu),
                    change_sum=change_sum,
                    residual_norm=residual_norm,
                )
            )
        if interval and passes % interval == 0:
            logger.debug(
                "relaxation_progress",
                passes=passes,
                change_sum=change_sum,
                residual_norm=residual_norm,
            )
        if change_sum < tolerance:
            termination = Termination.CONVERGED
            break

    if flagged:
        termination = Termination.INCONSISTENT_ROW

    return RelaxationOutcome(
        state=MultiplierState.from_internal(mu, passes),
        change_sum=change_sum,
        termination=termination,
        best=tracker,
        inconsistent_rows=tuple(sorted(flagged)),
    )


def solve_relaxation(
    system: LinearSystem,
    config: SolverConfig,
    *,
    observer: IterationObserver | None = None,
) -> SolveReport:
    """Solve ``system`` with the relaxation backend and build the report."""

    outcome = run_relaxation(system, config, observer=observer)
    gram_gradient = energy_gradient(
        GramOperator(system.matrix), system.rhs, outcome.state.internal
    )
    report = assemble_report(
        system,
        method=SolverMethod.RELAXATION,
        multipliers=outcome.state.multipliers,
        passes=outcome.state.passes,
        termination=outcome.termination,
        gradient_norm=norm2(gram_gradient),
        best=outcome.best,
        inconsistent_rows=outcome.inconsistent_rows,
    )
    logger.info(
        "relaxation_finished",
        passes=report.passes,
        termination=report.termination.value,
        change_sum=outcome.change_sum,
        residual_norm=report.residual_norm,
    )
    return report
