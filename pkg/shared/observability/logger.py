"""Structured solver logging: structlog renders events, loguru writes them."""

from __future__ import annotations

import logging
import sys
import uuid
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Any, Iterator, Mapping, TextIO

import structlog
from loguru import logger as loguru_logger

__all__ = [
    "configure_logging",
    "generate_run_id",
    "get_logger",
    "get_run_id",
    "solve_context",
]

_RUN_ID: ContextVar[str | None] = ContextVar("run_id", default=None)
_STDLIB_FLOORS = (
    logging.CRITICAL,
    logging.ERROR,
    logging.WARNING,
    logging.INFO,
    logging.DEBUG,
    logging.NOTSET,
)


class _LoggingState:
    configured = False
    service: str | None = None


def _format_record(record: Mapping[str, Any]) -> str:
    """Build the loguru template for one line: time, level, service, run, payload."""

    extra = record.get("extra") or {}
    payload = str(record.get("message", ""))
    # The return value is itself a format template.
    payload = payload.replace("{", "{{").replace("}", "}}")
    columns = (
        record["time"].isoformat(),
        f"{record['level'].name:<8}",
        extra.get("service", "-"),
        extra.get("run_id") or "-",
        payload,
    )
    return " | ".join(columns) + "\n"


def _resolve_level(level: str | int) -> tuple[int, str]:
    name = logging.getLevelName(level) if isinstance(level, int) else level.upper()
    try:
        numeric = loguru_logger.level(name).no
    except (TypeError, ValueError):
        raise ValueError(f"Unknown log level: {level}") from None
    return numeric, name


def get_run_id() -> str | None:
    """Return the run identifier of the innermost ``solve_context``."""

    return _RUN_ID.get()


def generate_run_id() -> str:
    return uuid.uuid4().hex


class _StdlibBridge(logging.Handler):
    """Forward ``logging`` records, warnings included, to loguru."""

    def emit(self, record: logging.LogRecord) -> None:  # pragma: no cover
        try:
            level: str | int = loguru_logger.level(record.levelname).name
        except ValueError:
            level = record.levelno
        extra: dict[str, Any] = {"logger": record.name}
        if get_run_id():
            extra["run_id"] = get_run_id()
        loguru_logger.bind(**extra).opt(exception=record.exc_info).log(
            level, record.getMessage()
        )


def _loguru_for(name: str | None = None, *_: Any) -> Any:
    return loguru_logger.bind(logger=name or "root")


def _write_stderr(line: str) -> None:
    sys.stderr.write(line)


def configure_logging(
    *,
    service_name: str | None = None,
    level: str | int = "INFO",
    sink: TextIO | None = None,
) -> None:
    """Install the loguru sink and the structlog pipeline once per process.

    Later calls only validate ``level`` and may rename the service. Lines go
    to ``sink``, or standard error when none is given, so standard output
    carries nothing but reports.
    """

    numeric, name = _resolve_level(level)

    if not _LoggingState.configured:
        loguru_logger.remove()
        loguru_logger.add(
            sink or _write_stderr,
            level=name,
            format=_format_record,
            backtrace=False,
            diagnose=False,
        )
        logging.basicConfig(handlers=[_StdlibBridge()], level=numeric, force=True)
        logging.captureWarnings(True)

        floor = next(value for value in _STDLIB_FLOORS if value <= numeric)
        structlog.configure(
            processors=[
                structlog.contextvars.merge_contextvars,
                structlog.processors.add_log_level,
                structlog.processors.TimeStamper(fmt="iso"),
                structlog.processors.format_exc_info,
                structlog.processors.JSONRenderer(),
            ],
            wrapper_class=structlog.make_filtering_bound_logger(floor),
            logger_factory=_loguru_for,
            cache_logger_on_first_use=True,
        )
        _LoggingState.configured = True

    if service_name:
        _LoggingState.service = service_name
        loguru_logger.configure(extra={"service": service_name})
        structlog.contextvars.bind_contextvars(service=service_name)


def get_logger(name: str | None = None) -> Any:
    """Return a structlog logger; ``name`` shows up as the loguru ``logger`` extra."""

    return structlog.get_logger(name)


@contextmanager
def solve_context(run_id: str | None = None, **extra: Any) -> Iterator[str]:
    """Tag every event inside the block with a run id and ``extra`` fields.

    Values bound by an enclosing block come back on exit.
    """

    extra.pop("run_id", None)
    rid = run_id or generate_run_id()
    fields = dict(extra)
    if _LoggingState.service:
        fields.setdefault("service", _LoggingState.service)

    token = _RUN_ID.set(rid)
    try:
        with structlog.contextvars.bound_contextvars(run_id=rid, **fields):
            with loguru_logger.contextualize(run_id=rid, **extra):
                yield rid
    finally:
        _RUN_ID.reset(token)
