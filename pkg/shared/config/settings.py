"""Application configuration powered by ``pydantic-settings``."""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from shared.models.solve import LineSearch


class SolverDefaults(BaseSettings):
    """Default iteration controls applied when a caller does not override them."""

    tolerance: float = Field(
        default=1e-10,
        gt=0.0,
        description="Stopping threshold for change sums and gradient norms",
    )
    max_passes: int = Field(
        default=300_000, ge=1, description="Cap on sweeps or CG iterations"
    )
    line_search: LineSearch = Field(
        default=LineSearch.PARABOLIC, description="CG line search mode"
    )
    delta_scale: float = Field(
        default=1e-3,
        gt=0.0,
        description="Relative spacing of the parabolic line search trial points",
    )
    gram_explicit_threshold: int = Field(
        default=512,
        ge=1,
        description="Largest equation count for which the Gram matrix is stored",
    )
    rank_tolerance: Optional[float] = Field(
        default=None,
        gt=0.0,
        description="Oracle eigenvalue cut-off relative to the largest eigenvalue",
    )
    project_rhs: bool = Field(
        default=False,
        description="Relax the right-hand side onto the column space of A first",
    )

    model_config = SettingsConfigDict(
        env_prefix="LSQ_SOLVER_", env_file=".env", extra="ignore"
    )


class LoggingSettings(BaseSettings):
    """Logging verbosity and progress reporting cadence."""

    level: str = Field(default="INFO", description="Minimum emitted log level")
    progress_interval: int = Field(
        default=10_000,
        ge=0,
        description="Passes between progress events; 0 disables them",
    )

    model_config = SettingsConfigDict(
        env_prefix="LSQ_LOG_", env_file=".env", extra="ignore"
    )


class Settings(BaseSettings):
    """Top-level application settings namespace."""

    solver: SolverDefaults = Field(default_factory=SolverDefaults)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    model_config = SettingsConfigDict(
        env_file=".env", env_nested_delimiter="__", extra="ignore"
    )


@lru_cache
def get_settings() -> Settings:
    """Return cached settings instance for application use."""

    return Settings()


__all__ = [
    "LoggingSettings",
    "Settings",
    "SolverDefaults",
    "get_settings",
]
