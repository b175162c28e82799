"""Run both backends on the bundled examples and judge them against golden values."""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from repositories.reference_examples import ReferenceExample, ReferenceExampleRepository
from shared.models import SolverConfig, SolverMethod, Termination
from solvers.dispatch import solve_system
from solvers.oracle import pinv_solve

from .constants import EXIT_OK, EXIT_SUITE_FAILURE
from .observability import logger

__all__ = ["CaseResult", "SuiteResult", "evaluate_example", "format_suite_table", "run_paper_suite"]

ORACLE_LABEL = "oracle"


class CaseResult(BaseModel):
    """Verdict for one example solved by one backend."""

    model_config = ConfigDict(frozen=True)

    example: str
    method: str = Field(description="Backend name, or 'oracle' for the pseudoinverse")
    passed: bool
    deviation: float = Field(description="Max-norm distance from the golden answer")
    tolerance: float
    passes: Optional[int] = None
    termination: Optional[Termination] = None
    reasons: tuple[str, ...] = ()


class SuiteResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    cases: tuple[CaseResult, ...]

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> tuple[CaseResult, ...]:
        return tuple(case for case in self.cases if not case.passed)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_SUITE_FAILURE


def _max_deviation(x: np.ndarray, expected: Iterable[float]) -> float:
    difference = x - np.asarray(tuple(expected), dtype=np.float64)
    if not np.all(np.isfinite(difference)):
        return float("inf")
    return float(np.max(np.abs(difference)))


def evaluate_example(example: ReferenceExample, config: SolverConfig) -> list[CaseResult]:
    """Solve ``example`` with every backend named in its golden checks."""

    results: list[CaseResult] = []
    golden = example.golden
    for method in (SolverMethod.RELAXATION, SolverMethod.CG):
        check = golden.checks.get(method)
        if check is None:
            continue
        report = solve_system(example.system, config.with_overrides(method=method))
        deviation = _max_deviation(report.preferred_x, golden.expected_x)
        reasons: list[str] = []
        if not deviation <= check.tolerance:
            reasons.append(f"deviation {deviation:.3g} exceeds {check.tolerance:g}")
        if check.max_passes is not None and report.passes > check.max_passes:
            reasons.append(f"{report.passes} passes exceed {check.max_passes}")
        if check.termination is not None and report.termination is not check.termination:
            reasons.append(f"terminated with {report.termination.value}")
        results.append(
            CaseResult(
                example=example.name,
                method=method.value,
                passed=not reasons,
                deviation=deviation,
                tolerance=check.tolerance,
                passes=report.passes,
                termination=report.termination,
                reasons=tuple(reasons),
            )
        )

    if golden.oracle is not None:
        x = pinv_solve(example.system, config.rank_tolerance)
        deviation = _max_deviation(x, golden.oracle.expected_x)
        passed = deviation <= golden.oracle.tolerance
        results.append(
            CaseResult(
                example=example.name,
                method=ORACLE_LABEL,
                passed=passed,
                deviation=deviation,
                tolerance=golden.oracle.tolerance,
                reasons=() if passed else (f"deviation {deviation:.3g} exceeds {golden.oracle.tolerance:g}",),
            )
        )

    for result in results:
        logger.info(
            "reference_case_evaluated",
            example=result.example,
            method=result.method,
            passed=result.passed,
            deviation=result.deviation,
            passes=result.passes,
        )
    return results


def run_paper_suite(
    repository: ReferenceExampleRepository | None = None,
    config: SolverConfig | None = None,
) -> SuiteResult:
    """Evaluate every bundled example; failures are results, never exceptions."""

    examples = repository if repository is not None else ReferenceExampleRepository()
    base = config if config is not None else SolverConfig.from_settings()
    cases: list[CaseResult] = []
    for example in examples:
        cases.extend(evaluate_example(example, base))
    return SuiteResult(cases=tuple(cases))


def format_suite_table(result: SuiteResult) -> str:
    header = ("example", "method", "deviation", "tolerance", "passes", "termination", "result")
    rows = [header]
    for case in result.cases:
        rows.append(
            (
                case.example,
                case.method,
                f"{case.deviation:.3e}",
                f"{case.tolerance:.0e}",
                "-" if case.passes is None else str(case.passes),
                "-" if case.termination is None else case.termination.value,
                "ok" if case.passed else "FAIL: " + "; ".join(case.reasons),
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header) - 1)]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row[:-1], widths)) + "  " + row[-1]
        for row in rows
    ]
    failures = len(result.failures)
    lines.append(f"{len(result.cases) - failures}/{len(result.cases)} checks passed")
    return "\n".join(lines) + "\n"
