"""Plain-text reader and writer for linear systems.

Grammar: the first content line holds ``M N``; the next ``M`` content lines
hold ``N`` coefficients each; the right-hand side follows either as one line
of ``M`` values or as ``M`` lines of one value. ``#`` starts a comment and
blank lines are ignored. Line numbers in errors are 1-based physical lines.
"""

from __future__ import annotations

import math
import re
from pathlib import Path
from typing import Iterator, TextIO

import numpy as np

from shared.errors import RejectedInputError, SystemParseError
from shared.observability import get_logger
from solvers.core import DenseMatrix, LinearSystem

__all__ = ["format_system", "load_system", "parse_system"]

logger = get_logger(__name__)

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_COUNT = re.compile(r"\d+")


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _parse_value(token: str, line: int) -> float:
    if not _NUMBER.fullmatch(token):
        try:
            value = float(token)
        except ValueError:
            raise SystemParseError(line, f"malformed number {token!r}") from None
        if not math.isfinite(value):
            raise SystemParseError(line, f"non-finite value {token!r}")
        raise SystemParseError(line, f"malformed number {token!r}")
    value = float(token)
    if not math.isfinite(value):
        raise SystemParseError(line, f"non-finite value {token!r}")
    return value


def _parse_count(token: str, line: int, name: str) -> int:
    if not _COUNT.fullmatch(token) or int(token) < 1:
        raise SystemParseError(line, f"{name} must be a positive integer, got {token!r}")
    return int(token)


def parse_system(source: str | TextIO) -> LinearSystem:
    """Parse a linear system from text or an open text stream."""

    text = source if isinstance(source, str) else source.read()
    lines = _content_lines(text)
    end_line = len(text.splitlines()) + 1

    def next_line(expected: str) -> tuple[int, list[str]]:
        try:
            return next(lines)
        except StopIteration:
            raise SystemParseError(end_line, f"unexpected end of input, expected {expected}") from None

    line, header = next_line("the header 'M N'")
    if len(header) != 2:
        raise SystemParseError(line, f"header must be 'M N', got {len(header)} fields")
    rows = _parse_count(header[0], line, "M")
    cols = _parse_count(header[1], line, "N")

    entries = np.empty((rows, cols), dtype=np.float64)
    for i in range(rows):
        line, tokens = next_line(f"coefficient row {i + 1} of {rows}")
        if len(tokens) != cols:
            raise SystemParseError(line, f"expected {cols} coefficients, got {len(tokens)}")
        entries[i] = [_parse_value(token, line) for token in tokens]

    rhs = np.empty(rows, dtype=np.float64)
    line, tokens = next_line(f"{rows} right-hand-side values")
    if len(tokens) == rows:
        rhs[:] = [_parse_value(token, line) for token in tokens]
    elif len(tokens) == 1:
        rhs[0] = _parse_value(tokens[0], line)
        for k in range(1, rows):
            line, tokens = next_line(f"right-hand-side value {k + 1} of {rows}")
            if len(tokens) != 1:
                raise SystemParseError(line, f"expected 1 right-hand-side value, got {len(tokens)}")
            rhs[k] = _parse_value(tokens[0], line)
    else:
        raise SystemParseError(
            line, f"expected {rows} right-hand-side values on one line or one per line"
        )

    for line, _ in lines:
        raise SystemParseError(line, "unexpected content after the right-hand side")

    system = LinearSystem(DenseMatrix.from_array(entries), rhs)
    logger.debug("system_parsed", rows=rows, cols=cols)
    return system


def load_system(path: str | Path) -> LinearSystem:
    """Read and parse the system stored at ``path``."""

    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise RejectedInputError(
            f"cannot read system file {str(path)!r}: {exc}",
            title="Unreadable Input",
        ) from exc
    return parse_system(text)


def _format_value(value: float) -> str:
    return format(float(value), ".17g")


def format_system(system: LinearSystem) -> str:
    """Render ``system`` so that :func:`parse_system` restores it bit for bit."""

    lines = [f"{system.rows} {system.cols}"]
    lines.extend(" ".join(_format_value(v) for v in row) for row in system.matrix.array)
    lines.append(" ".join(_format_value(v) for v in system.rhs))
    return "\n".join(lines) + "\n"
