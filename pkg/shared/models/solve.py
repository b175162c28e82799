"""Configuration and report models shared by every solver backend."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Callable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from shared.errors import RejectedInputError

if TYPE_CHECKING:  # pragma: no cover - import used only for static typing
    from shared.config.settings import Settings


class SolverMethod(str, Enum):
    """Iterative backends able to minimize the multiplier functional."""

    RELAXATION = "relaxation"
    CG = "cg"

    def __str__(self) -> str:  # pragma: no cover - trivial
        return self.value


class LineSearch(str, Enum):
    """Step-length rules available to the conjugate gradient backend."""

    PARABOLIC = "parabolic"
    EXACT = "exact"

    def __str__(self) -> str:  # pragma: no cover - trivial
        return self.value


class Termination(str, Enum):
    """Reason an iterative solve stopped."""

    CONVERGED = "Converged"
    MAX_PASSES = "MaxPasses"
    FLAT_DIRECTION = "FlatDirection"
    INCONSISTENT_ROW = "InconsistentRow"

    def __str__(self) -> str:  # pragma: no cover - trivial
        return self.value


class SolverConfig(BaseModel):
    """Validated knobs controlling a single solve."""

    model_config = ConfigDict(frozen=True)

    method: SolverMethod = Field(
        default=SolverMethod.RELAXATION, description="Backend used for the solve"
    )
    tolerance: float = Field(
        default=1e-10,
        gt=0.0,
        description="Threshold for the change sum (lambda units) and gradient norm",
    )
    max_passes: int = Field(
        default=300_000, ge=1, description="Cap on sweeps or CG iterations"
    )
    line_search: LineSearch = Field(
        default=LineSearch.PARABOLIC, description="CG step-length rule"
    )
    delta_scale: float = Field(
        default=1e-3,
        gt=0.0,
        description="Relative distance of the parabolic trial points",
    )
    gram_explicit_threshold: int = Field(
        default=512,
        ge=1,
        description="Store the Gram matrix when the equation count is at most this",
    )
    rank_tolerance: Optional[float] = Field(
        default=None,
        gt=0.0,
        description="Oracle eigenvalue cut-off; None selects 1e-12 * M",
    )
    project_rhs: bool = Field(
        default=False,
        description="Relax b onto the column space of A before each row sweep",
    )
    progress_interval: int = Field(
        default=10_000,
        ge=0,
        description="Passes between progress log events; 0 disables them",
    )

    @classmethod
    def from_settings(
        cls, settings: "Settings | None" = None, **overrides: Any
    ) -> "SolverConfig":
        """Build a config from environment settings plus explicit overrides.

        ``None`` overrides are ignored so CLI flags that were not supplied fall
        back to the configured defaults.
        """

        if settings is None:
            from shared.config.settings import get_settings

            settings = get_settings()

        values: dict[str, Any] = settings.solver.model_dump()
        values["progress_interval"] = settings.logging.progress_interval
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls.validated(values)

    @classmethod
    def validated(cls, values: dict[str, Any]) -> "SolverConfig":
        """Validate ``values`` and translate failures into rejected input."""

        try:
            return cls.model_validate(values)
        except ValidationError as exc:
            fields = sorted({str(error["loc"][0]) for error in exc.errors() if error["loc"]})
            raise RejectedInputError(
                f"Invalid solver configuration: {', '.join(fields) or 'unknown field'}",
                extensions={"fields": fields},
            ) from exc

    def with_overrides(self, **overrides: Any) -> "SolverConfig":
        """Return a validated copy with ``overrides`` applied."""

        values = self.model_dump()
        values.update(overrides)
        return self.validated(values)


class BestIterate(BaseModel):
    """Iterate with the smallest residual norm observed during a solve."""

    model_config = ConfigDict(frozen=True)

    x: tuple[float, ...] = Field(description="Recovered unknowns at that pass")
    passes: int = Field(ge=0, description="Pass index at which it was observed")
    residual_norm: float = Field(ge=0.0, description="Euclidean norm of Ax - b")


class OracleComparison(BaseModel):
    """Pseudoinverse answer attached to a report for verification."""

    model_config = ConfigDict(frozen=True)

    x: tuple[float, ...] = Field(description="Minimum-norm least-squares solution")
    deviation: float = Field(
        ge=0.0, description="Euclidean distance between the iterate and the oracle"
    )


class SolveReport(BaseModel):
    """Outcome of a solve, including recovered unknowns and diagnostics."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    method: SolverMethod = Field(description="Backend that produced the report")
    x: tuple[float, ...] = Field(description="Recovered unknowns")
    multipliers: tuple[float, ...] = Field(
        alias="lambda", description="Final Lagrange multipliers"
    )
    residual_norm: float = Field(ge=0.0, description="Euclidean norm of Ax - b")
    solution_norm: float = Field(ge=0.0, description="Euclidean norm of x")
    passes: int = Field(ge=0, description="Completed sweeps or iterations")
    termination: Termination = Field(description="Reason the iteration stopped")
    gradient_norm: float = Field(
        ge=0.0, description="Euclidean norm of the functional gradient"
    )
    best_residual: Optional[BestIterate] = Field(
        default=None,
        alias="best_residual_x",
        description="Smallest-residual iterate when the solve did not converge",
    )
    inconsistent_rows: tuple[int, ...] = Field(
        default=(), description="All-zero rows whose right-hand side is non-zero"
    )
    oracle: Optional[OracleComparison] = Field(
        default=None, description="Pseudoinverse comparison, when requested"
    )

    @property
    def x_array(self) -> np.ndarray:
        """Return ``x`` as a float64 array."""

        return np.asarray(self.x, dtype=np.float64)

    @property
    def preferred_x(self) -> np.ndarray:
        """Return the best-residual iterate for unconverged solves, else ``x``."""

        if self.termination is not Termination.CONVERGED and self.best_residual:
            return np.asarray(self.best_residual.x, dtype=np.float64)
        return self.x_array


@dataclass(frozen=True, slots=True)
class IterationRecord:
    """Per-pass diagnostics handed to solve observers."""

    passes: int
    energy: float
    change_sum: float
    residual_norm: float
    gradient_norm: float | None = None


IterationObserver = Callable[[IterationRecord], None]


__all__ = [
    "BestIterate",
    "IterationObserver",
    "IterationRecord",
    "LineSearch",
    "OracleComparison",
    "SolveReport",
    "SolverConfig",
    "SolverMethod",
    "Termination",
]
