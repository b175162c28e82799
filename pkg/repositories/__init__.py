"""Data access repositories for bundled example systems."""

from .reference_examples import FixtureLoadError, ReferenceExample, ReferenceExampleRepository

__all__ = ["FixtureLoadError", "ReferenceExample", "ReferenceExampleRepository"]
