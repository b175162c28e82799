"""Entry point that routes a solve to the configured backend."""

from __future__ import annotations

from shared.models import (
    IterationObserver,
    OracleComparison,
    SolveReport,
    SolverConfig,
    SolverMethod,
)
from solvers.congrad import solve_cg
from solvers.core import LinearSystem, norm2
from solvers.oracle import pinv_solve
from solvers.relaxation import solve_relaxation

__all__ = ["attach_oracle", "solve_system"]


def attach_oracle(
    report: SolveReport, system: LinearSystem, rank_tolerance: float | None = None
) -> SolveReport:
    """Return ``report`` with the pseudoinverse answer and its distance to ``x``."""

    reference = pinv_solve(system, rank_tolerance)
    comparison = OracleComparison(
        x=tuple(reference.tolist()),
        deviation=norm2(report.x_array - reference),
    )
    return report.model_copy(update={"oracle": comparison})


def solve_system(
    system: LinearSystem,
    config: SolverConfig,
    *,
    observer: IterationObserver | None = None,
    with_oracle: bool = False,
) -> SolveReport:
    if config.method is SolverMethod.CG:
        report = solve_cg(system, config, observer=observer)
    else:
        report = solve_relaxation(system, config, observer=observer)
    if with_oracle:
        report = attach_oracle(report, system, config.rank_tolerance)
    return report
