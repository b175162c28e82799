"""Problem details and custom exceptions raised by the solver packages."""

from __future__ import annotations

from typing import Any, Mapping

from pydantic import BaseModel, ConfigDict, Field

__all__ = [
    "EXIT_USAGE",
    "FlatDirectionError",
    "ProblemDetails",
    "RejectedInputError",
    "SolverError",
    "SystemParseError",
]

EXIT_USAGE = 64


class ProblemDetails(BaseModel):
    """Representation of an RFC 7807 style problem payload."""

    type: str = Field(
        default="about:blank", description="URI identifying the error type"
    )
    title: str = Field(
        default="An error occurred", description="Short human-readable summary"
    )
    status: int = Field(default=1, description="Process exit status for the error")
    detail: str | None = Field(
        default=None, description="Detailed description of the error"
    )
    instance: str | None = Field(
        default=None, description="Input (file name or stream) that caused the error"
    )

    model_config = ConfigDict(extra="allow")


class SolverError(RuntimeError):
    """Base exception carrying structured problem details metadata."""

    default_exit_code = 1
    default_title = "Solver Error"
    default_type = "urn:lagrange-lsq:problem:solver-error"

    def __init__(
        self,
        detail: str | None = None,
        *,
        exit_code: int | None = None,
        title: str | None = None,
        type_uri: str | None = None,
        extensions: Mapping[str, Any] | None = None,
    ) -> None:
        message = detail or title or self.default_title
        super().__init__(message)
        self.detail = detail or message
        self.exit_code = exit_code or self.default_exit_code
        self.title = title or self.default_title
        self.problem_type = type_uri or self.default_type
        self.extensions = dict(extensions or {})

    def to_problem_details(self, *, instance: str | None = None) -> ProblemDetails:
        """Return a :class:`ProblemDetails` representation of the exception."""

        return ProblemDetails(
            type=self.problem_type,
            title=self.title,
            status=self.exit_code,
            detail=self.detail,
            instance=instance,
            **self.extensions,
        )


class RejectedInputError(SolverError, ValueError):
    """Raised when dimensions, indices, values or settings are unusable."""

    default_exit_code = EXIT_USAGE
    default_title = "Rejected Input"
    default_type = "urn:lagrange-lsq:problem:rejected-input"


class SystemParseError(RejectedInputError):
    """Raised when a linear system text file does not follow the grammar."""

    default_title = "System Parse Error"
    default_type = "urn:lagrange-lsq:problem:parse-error"

    def __init__(self, line: int, reason: str) -> None:
        self.line = line
        self.reason = reason
        super().__init__(
            f"line {line}: {reason}",
            extensions={"line": line},
        )


class FlatDirectionError(SolverError):
    """Raised by a line search that finds no usable positive curvature."""

    default_exit_code = 3
    default_title = "Flat Search Direction"
    default_type = "urn:lagrange-lsq:problem:flat-direction"

    def __init__(self, curvature: float, *, detail: str | None = None) -> None:
        self.curvature = curvature
        message = detail or (
            f"Search direction has curvature {curvature!r}; no minimizer along it."
        )
        super().__init__(message, extensions={"curvature": curvature})
