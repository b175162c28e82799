"""Human and JSON renderings of solve reports and problem details."""

from __future__ import annotations

import json
from enum import Enum
from typing import Any, Sequence

from shared.errors import ProblemDetails
from shared.models import SolveReport

__all__ = ["ReportFormat", "emit_problem", "emit_report", "report_payload"]

_LABEL_WIDTH = 16


class ReportFormat(str, Enum):
    HUMAN = "human"
    JSON = "json"

    def __str__(self) -> str:  # pragma: no cover - trivial
        return self.value


def report_payload(report: SolveReport) -> dict[str, Any]:
    """Return the JSON-ready mapping for ``report`` using the public key names."""

    return report.model_dump(mode="json", by_alias=True, exclude_none=True)


def _number(value: float) -> str:
    return f"{value:.10g}"


def _vector_block(name: str, values: Sequence[float]) -> list[str]:
    lines = [f"{name}:"]
    width = len(str(len(values) - 1))
    for index, value in enumerate(values):
        lines.append(f"  {name}[{index:>{width}}] = {_number(value)}")
    return lines


def _row(label: str, value: Any) -> str:
    return f"{label:<{_LABEL_WIDTH}}{value}"


def _human(report: SolveReport) -> str:
    lines = [
        _row("method", report.method.value),
        _row("termination", report.termination.value),
        _row("passes", report.passes),
        _row("residual_norm", _number(report.residual_norm)),
        _row("solution_norm", _number(report.solution_norm)),
        _row("gradient_norm", _number(report.gradient_norm)),
    ]
    if report.inconsistent_rows:
        rows = ", ".join(str(row) for row in report.inconsistent_rows)
        lines.append(_row("zero rows", f"{rows} (non-zero right-hand side)"))
    lines.extend(_vector_block("x", report.x))
    if report.best_residual is not None:
        best = report.best_residual
        lines.append(
            _row("best residual", f"{_number(best.residual_norm)} at pass {best.passes}")
        )
        lines.extend(_vector_block("best_x", best.x))
    if report.oracle is not None:
        lines.append(_row("oracle deviation", _number(report.oracle.deviation)))
        lines.extend(_vector_block("oracle_x", report.oracle.x))
    return "\n".join(lines) + "\n"


def emit_report(report: SolveReport, fmt: ReportFormat | str = ReportFormat.HUMAN) -> str:
    """Render ``report`` as an aligned table or a single JSON object.

    JSON numbers use the shortest representation that parses back to the same
    double.
    """

    if ReportFormat(fmt) is ReportFormat.JSON:
        return json.dumps(report_payload(report)) + "\n"
    return _human(report)


def emit_problem(problem: ProblemDetails, fmt: ReportFormat | str = ReportFormat.HUMAN) -> str:
    if ReportFormat(fmt) is ReportFormat.JSON:
        return json.dumps(problem.model_dump(exclude_none=True)) + "\n"
    detail = f": {problem.detail}" if problem.detail else ""
    where = f" ({problem.instance})" if problem.instance else ""
    return f"error: {problem.title}{where}{detail}\n"
