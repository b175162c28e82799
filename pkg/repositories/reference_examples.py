"""Fixture-backed repository of the reference example systems and golden values."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from shared.errors import SolverError
from shared.models import SolverMethod, Termination
from solvers.cli.formats import parse_system
from solvers.core import LinearSystem

_FIXTURE_DIRECTORY = Path(__file__).parent / "fixtures"
_SYSTEM_DIRECTORY = _FIXTURE_DIRECTORY / "systems"
_GOLDEN_PATH = _FIXTURE_DIRECTORY / "golden.json"


class FixtureLoadError(RuntimeError):
    """Raised when example fixtures cannot be loaded from disk."""

    def __init__(
        self,
        errors: list[str],
        examples: dict[str, "ReferenceExample"] | None = None,
    ) -> None:
        message = "Failed to load example fixtures:\n" + "\n".join(errors)
        super().__init__(message)
        self.errors = errors
        self.examples: dict[str, ReferenceExample] = examples or {}


class GoldenCheck(BaseModel):
    """Acceptance thresholds for one backend on one example."""

    model_config = ConfigDict(frozen=True)

    tolerance: float = Field(gt=0.0, description="Max-norm distance allowed from expected_x")
    max_passes: Optional[int] = Field(
        default=None, ge=1, description="Upper bound on the reported pass count"
    )
    termination: Optional[Termination] = Field(
        default=None, description="Required termination reason, when any"
    )


class OracleGolden(BaseModel):
    model_config = ConfigDict(frozen=True)

    expected_x: tuple[float, ...]
    tolerance: float = Field(gt=0.0)


class GoldenValues(BaseModel):
    """Reference answer for an example and the thresholds used to judge it."""

    model_config = ConfigDict(frozen=True)

    title: str
    expected_x: tuple[float, ...]
    checks: dict[SolverMethod, GoldenCheck]
    oracle: Optional[OracleGolden] = None


@dataclass(frozen=True)
class ReferenceExample:
    name: str
    system: LinearSystem
    golden: GoldenValues

    @property
    def title(self) -> str:
        return self.golden.title


def _load_golden(path: Path, errors: list[str]) -> dict[str, GoldenValues]:
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        errors.append(f"{path}: {exc.strerror or 'file not found'}")
        return {}
    except json.JSONDecodeError as exc:
        errors.append(f"{path}: invalid JSON ({exc.msg})")
        return {}

    if not isinstance(payload, Mapping):
        errors.append(f"{path}: top-level JSON payload must be an object")
        return {}

    golden: dict[str, GoldenValues] = {}
    for name, entry in payload.items():
        try:
            golden[name] = GoldenValues.model_validate(entry)
        except ValidationError as exc:
            errors.append(f"{path}: entry {name!r} is invalid ({exc.error_count()} errors)")
    return golden


def load_reference_examples(
    system_paths: Iterable[Path], golden_path: Path
) -> dict[str, ReferenceExample]:
    """Pair every system file with its golden entry, keyed by file stem."""

    errors: list[str] = []
    golden = _load_golden(golden_path, errors)
    examples: dict[str, ReferenceExample] = {}

    for path in system_paths:
        name = path.stem
        values = golden.get(name)
        if values is None:
            errors.append(f"{path}: no golden values named {name!r}")
            continue
        try:
            system = parse_system(path.read_text(encoding="utf-8"))
        except OSError as exc:
            errors.append(f"{path}: {exc.strerror or 'unreadable'}")
            continue
        except SolverError as exc:
            errors.append(f"{path}: {exc.detail}")
            continue
        if len(values.expected_x) != system.cols:
            errors.append(
                f"{path}: expected_x has {len(values.expected_x)} entries for {system.cols} unknowns"
            )
            continue
        examples[name] = ReferenceExample(name=name, system=system, golden=values)

    if errors:
        raise FixtureLoadError(errors, examples)

    return examples


def _discover_system_paths() -> list[Path]:
    if not _SYSTEM_DIRECTORY.exists():
        return []
    return sorted(path for path in _SYSTEM_DIRECTORY.glob("*.txt") if path.is_file())


_REFERENCE_EXAMPLES: dict[str, ReferenceExample]

try:
    _REFERENCE_EXAMPLES = load_reference_examples(_discover_system_paths(), _GOLDEN_PATH)
except FixtureLoadError as exc:  # pragma: no cover - warning path
    warnings.warn(str(exc))
    _REFERENCE_EXAMPLES = exc.examples


class ReferenceExampleRepository:
    """Read access to the bundled example systems."""

    def __init__(self, examples: Mapping[str, ReferenceExample] | None = None) -> None:
        self._examples = dict(_REFERENCE_EXAMPLES if examples is None else examples)

    def names(self) -> list[str]:
        return sorted(self._examples)

    def get(self, name: str) -> ReferenceExample | None:
        return self._examples.get(name)

    def __iter__(self) -> Iterator[ReferenceExample]:
        for name in self.names():
            yield self._examples[name]

    def __len__(self) -> int:
        return len(self._examples)


__all__ = [
    "FixtureLoadError",
    "GoldenCheck",
    "GoldenValues",
    "OracleGolden",
    "ReferenceExample",
    "ReferenceExampleRepository",
    "load_reference_examples",
]
