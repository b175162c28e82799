"""Fletcher-Reeves conjugate gradient on the multiplier functional."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike

from shared.errors import FlatDirectionError, RejectedInputError
from shared.models import (
    IterationObserver,
    IterationRecord,
    LineSearch,
    SolveReport,
    SolverConfig,
    SolverMethod,
    Termination,
)
from shared.observability import get_logger
from solvers.core import FloatVector, LinearSystem, as_vector, norm1, norm2
from solvers.lagrange import (
    BestResidualTracker,
    GramOperator,
    assemble_report,
    energy_gradient,
    multipliers_from_internal,
)

from .line_search import exact_step, parabolic_step, sample_parabola, trial_spacing

__all__ = ["CGState", "direction_update", "fr_beta", "solve_cg"]

logger = get_logger(__name__)

DESCENT_SLACK = 1e-12


def fr_beta(grad_new: ArrayLike, grad_old: ArrayLike) -> float:
    """Return ``|grad_new|^2 / |grad_old|^2``."""

    new = as_vector(grad_new, name="grad_new")
    old = as_vector(grad_old, new.shape[0], name="grad_old")
    denominator = float(np.dot(old, old))
    if denominator <= 0.0:
        raise RejectedInputError(
            "previous gradient is zero; the iteration should already have converged"
        )
    return float(np.dot(new, new)) / denominator


def direction_update(
    grad: ArrayLike, prev_direction: ArrayLike | None, beta: float
) -> FloatVector:
    """Return ``-grad`` on a (re)start, otherwise ``-grad + beta * prev_direction``."""

    gradient = as_vector(grad, name="grad")
    if prev_direction is None:
        return -gradient
    previous = as_vector(prev_direction, gradient.shape[0], name="prev_direction")
    return -gradient + beta * previous


@dataclass(slots=True)
class CGState:
    """Working vectors of one conjugate gradient solve.

    Vectors are kept for the scaled multipliers ``mu = -lambda / 2``; the
    gradient ``[w] mu - b`` coincides with the gradient of the ``phi``
    functional, while a step along ``direction`` in ``mu`` is a step along
    ``-2 * direction`` in ``lambda``.
    """

    mu: FloatVector
    gradient: FloatVector
    direction: FloatVector | None = None
    grad_norm_sq_prev: float = 0.0
    iteration: int = 0
    w_mu: FloatVector = field(default=None, repr=False)  # type: ignore[assignment]
    energy: float = 0.0

    @classmethod
    def start(cls, size: int) -> "CGState":
        zeros = np.zeros(size, dtype=np.float64)
        return cls(mu=zeros.copy(), gradient=zeros.copy(), w_mu=zeros.copy())

    @property
    def multipliers(self) -> FloatVector:
        return multipliers_from_internal(self.mu)

    def refresh(self, gram: GramOperator, b: FloatVector) -> None:
        """Recompute the cached ``[w] mu`` and energy from scratch."""

        self.w_mu = gram.apply(self.mu)
        self.energy = _energy(self.mu, self.w_mu, b)


def _energy(mu: FloatVector, w_mu: FloatVector, b: FloatVector) -> float:
    return float(0.5 * np.dot(mu, w_mu) - np.dot(mu, b))


def _line_search(
    state: CGState,
    direction: FloatVector,
    w_direction: FloatVector,
    b: FloatVector,
    gram: GramOperator,
    config: SolverConfig,
) -> float:
    curvature = float(np.dot(direction, w_direction))
    if config.line_search is LineSearch.EXACT:
        return exact_step(state.gradient, direction, curvature, gram.scale)

    def along(t: float) -> float:
        return _energy(state.mu + t * direction, state.w_mu + t * w_direction, b)

    delta = trial_spacing(state.mu, direction, config.delta_scale)
    return parabolic_step(*sample_parabola(along, delta), delta)


def solve_cg(
    system: LinearSystem,
    config: SolverConfig,
    *,
    observer: IterationObserver | None = None,
) -> SolveReport:
    """Minimize the multiplier functional from ``lambda = 0``.

    Stops when the gradient norm or the per-iteration multiplier change sum
    falls below ``config.tolerance``. The direction restarts from the steepest
    descent every ``M`` iterations and whenever it fails to descend. A flat
    or non-descending line search ends the solve with ``FlatDirection``.
    """

    A = system.matrix
    b = system.rhs
    gram = GramOperator.build(A, explicit_threshold=config.gram_explicit_threshold)
    size = gram.size
    tolerance = config.tolerance
    interval = config.progress_interval

    zero_rows = gram.diagonal == 0.0
    flagged = tuple(int(k) for k in np.flatnonzero(zero_rows & (np.abs(b) > tolerance)))

    state = CGState.start(size)
    tracker = BestResidualTracker()
    termination = Termination.MAX_PASSES
    passes = 0

    logger.info(
        "cg_started",
        rows=A.rows,
        cols=A.cols,
        explicit_gram=gram.is_explicit,
        line_search=config.line_search.value,
        tolerance=tolerance,
        max_passes=config.max_passes,
    )

    for iteration in range(config.max_passes):
        state.iteration = iteration
        restart = iteration % size == 0
        if restart and iteration:
            state.refresh(gram, b)

        gradient = state.w_mu - b
        gradient[zero_rows] = 0.0
        state.gradient = gradient
        grad_sq = float(np.dot(gradient, gradient))
        if math.sqrt(grad_sq) < tolerance:
            termination = Termination.CONVERGED
            break

        if restart or state.direction is None:
            direction = direction_update(gradient, None, 0.0)
        else:
            beta = grad_sq / state.grad_norm_sq_prev
            direction = direction_update(gradient, state.direction, beta)
            if float(np.dot(direction, gradient)) >= 0.0:
                direction = -gradient

        w_direction = gram.apply(direction)
        try:
            step = _line_search(state, direction, w_direction, b, gram, config)
            mu_new = state.mu + step * direction
            w_mu_new = state.w_mu + step * w_direction
            energy_new = _energy(mu_new, w_mu_new, b)
            if energy_new > state.energy + DESCENT_SLACK * (1.0 + abs(state.energy)):
                raise FlatDirectionError(
                    float(np.dot(direction, w_direction)),
                    detail="step increased the minimized functional",
                )
        except FlatDirectionError as exc:
            logger.warning(
                "cg_flat_direction",
                iteration=iteration,
                curvature=exc.curvature,
                reason=exc.detail,
            )
            termination = Termination.FLAT_DIRECTION
            break

        change_sum = 2.0 * norm1(step * direction)
        state.mu = mu_new
        state.w_mu = w_mu_new
        state.energy = energy_new
        state.direction = direction
        state.grad_norm_sq_prev = grad_sq
        passes = iteration + 1

        x = A.array.T @ state.mu
        residual_norm = norm2(A.array @ x - b)
        tracker.offer(passes, x, residual_norm, state.mu)

        if observer is not None:
            observer(
                IterationRecord(
                    passes=passes,
                    energy=energy_new,
                    change_sum=change_sum,
                    residual_norm=residual_norm,
                    gradient_norm=math.sqrt(grad_sq),
                )
            )
        if interval and passes % interval == 0:
            logger.debug(
                "cg_progress",
                passes=passes,
                gradient_norm=math.sqrt(grad_sq),
                change_sum=change_sum,
                residual_norm=residual_norm,
            )
        if change_sum < tolerance:
            termination = Termination.CONVERGED
            break

    if flagged:
        termination = Termination.INCONSISTENT_ROW

    report = assemble_report(
        system,
        method=SolverMethod.CG,
        multipliers=state.multipliers,
        passes=passes,
        termination=termination,
        gradient_norm=norm2(energy_gradient(gram, b, state.mu)),
        best=tracker,
        inconsistent_rows=flagged,
    )
    logger.info(
        "cg_finished",
        passes=report.passes,
        termination=report.termination.value,
        gradient_norm=report.gradient_norm,
        residual_norm=report.residual_norm,
    )
    return report
