"""Observability helpers for command-line solves."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from contextlib import contextmanager
from dataclasses import asdict, is_dataclass
from typing import Any, Iterator

import numpy as np

from shared.observability import get_logger, solve_context

__all__ = ["cli_solve_context", "logger", "summarize_for_logging"]

logger = get_logger("solvers.cli")


@contextmanager
def cli_solve_context(*, run_id: str | None = None, **extra: Any) -> Iterator[str]:
    """Bind a run identifier and ``channel="cli"`` for one invocation."""

    cli_context = {"channel": "cli"}
    cli_context.update(extra)

    with solve_context(run_id=run_id, **cli_context) as bound_run_id:
        yield bound_run_id


def _vector_summary(values: Sequence[float] | np.ndarray, max_items: int) -> dict[str, Any]:
    array = np.asarray(values, dtype=np.float64).reshape(-1)
    finite = bool(np.all(np.isfinite(array)))
    return {
        "count": int(array.size),
        "sample": [float(v) for v in array[:max_items]],
        "norm": float(np.linalg.norm(array)) if finite else None,
    }


def summarize_for_logging(
    payload: Any,
    *,
    max_depth: int = 3,
    max_items: int = 5,
) -> Any:
    """Return a compact representation of ``payload`` for log emission.

    Numeric sequences collapse to their length, the first ``max_items``
    entries and their Euclidean norm. Mappings, dataclasses and pydantic models
    are traversed up to ``max_depth`` levels.
    """

    def _summarize(value: Any, depth: int) -> Any:
        if depth <= 0:
            return "[truncated]"

        if isinstance(value, Mapping):
            return {str(key): _summarize(item, depth - 1) for key, item in value.items()}

        if is_dataclass(value) and not isinstance(value, type):
            return _summarize(asdict(value), depth)

        if hasattr(value, "model_dump"):
            mapping = value.model_dump(mode="python")
            if isinstance(mapping, Mapping):
                return _summarize(mapping, depth)

        if isinstance(value, np.ndarray):
            return _vector_summary(value, max_items)

        if isinstance(value, Sequence) and not isinstance(value, (str, bytes, bytearray)):
            if value and all(isinstance(item, (int, float)) for item in value):
                return _vector_summary(value, max_items)
            return [_summarize(item, depth - 1) for item in list(value)[:max_items]]

        if isinstance(value, (str, int, float, bool)) or value is None:
            return value

        return str(value)

    return _summarize(payload, max_depth)
