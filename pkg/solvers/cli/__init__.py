"""File formats, report rendering and helpers behind the ``lsq-solve`` command."""

from pathlib import Path

from dotenv import load_dotenv

from .formats import format_system, load_system, parse_system
from .generator import generate_system
from .reporting import ReportFormat, emit_problem, emit_report

__all__ = [
    "ReportFormat",
    "__version__",
    "emit_problem",
    "emit_report",
    "format_system",
    "generate_system",
    "load_system",
    "parse_system",
]

__version__ = "0.1.0"

load_dotenv(Path(__file__).resolve().parents[2] / ".env", override=False)
