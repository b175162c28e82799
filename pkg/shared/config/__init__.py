"""Environment-driven configuration for the solver packages."""

from .settings import LoggingSettings, Settings, SolverDefaults, get_settings

__all__ = ["LoggingSettings", "Settings", "SolverDefaults", "get_settings"]
