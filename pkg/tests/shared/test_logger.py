"""Tests for the shared observability logging helpers."""

from __future__ import annotations

import types
from datetime import datetime, timezone

import pytest
import structlog
from loguru import logger as loguru_logger

from shared.observability import configure_logging, get_run_id, solve_context
from shared.observability import logger as logger_module


@pytest.fixture(autouse=True)
def _clean_context():
    yield
    structlog.contextvars.unbind_contextvars("run_id", "custom", "phase")


def test_solve_context_preserves_service_binding() -> None:
    configure_logging(service_name="tests")

    with solve_context(phase="sweep"):
        assert structlog.contextvars.get_contextvars()["phase"] == "sweep"

    context = structlog.contextvars.get_contextvars()
    assert context["service"] == "tests"
    assert "phase" not in context


def test_solve_context_restores_existing_values() -> None:
    structlog.contextvars.bind_contextvars(run_id="outer", custom="value")

    with solve_context(run_id="inner", custom="inner-value"):
        context = structlog.contextvars.get_contextvars()
        assert context["run_id"] == "inner"
        assert context["custom"] == "inner-value"

    context = structlog.contextvars.get_contextvars()
    assert context["run_id"] == "outer"
    assert context["custom"] == "value"


def test_nested_run_ids() -> None:
    assert get_run_id() is None

    with solve_context() as outer:
        assert get_run_id() == outer
        with solve_context(run_id="nested") as inner:
            assert inner == "nested"
            assert get_run_id() == "nested"
        assert get_run_id() == outer

    assert get_run_id() is None


def test_unknown_level_is_rejected() -> None:
    with pytest.raises(ValueError, match="Unknown log level: LOUD"):
        configure_logging(level="LOUD")


def test_format_record_escapes_braces() -> None:
    record = {
        "time": datetime(2024, 1, 2, 3, 4, 5, tzinfo=timezone.utc),
        "level": types.SimpleNamespace(name="INFO"),
        "extra": {"service": "lsq-solve", "run_id": "r1"},
        "message": '{"event": "cg_started"}',
    }

    line = logger_module._format_record(record)

    assert line == (
        '2024-01-02T03:04:05+00:00 | INFO     | lsq-solve | r1 | {{"event": "cg_started"}}\n'
    )


def test_format_record_placeholders_for_missing_context() -> None:
    record = {
        "time": datetime(2024, 1, 2, tzinfo=timezone.utc),
        "level": types.SimpleNamespace(name="WARNING"),
        "extra": {},
        "message": "plain",
    }

    assert logger_module._format_record(record).endswith("| WARNING  | - | - | plain\n")


def test_loguru_lines_carry_run_id() -> None:
    messages: list[str] = []
    handler_id = loguru_logger.add(
        messages.append, format=logger_module._format_record, level="INFO"
    )
    try:
        with solve_context(run_id="run-42"):
            loguru_logger.info('{"event": "relaxation_started"}')
    finally:
        loguru_logger.remove(handler_id)

    assert len(messages) == 1
    assert '| run-42 | {"event": "relaxation_started"}' in messages[0]
