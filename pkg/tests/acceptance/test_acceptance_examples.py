"""Reference example systems solved end to end by both backends."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np
import pytest

from repositories.reference_examples import ReferenceExampleRepository
from shared.models import IterationRecord, SolveReport, SolverConfig, SolverMethod, Termination
from solvers.dispatch import solve_system
from solvers.oracle import pinv_solve

METHODS = (SolverMethod.RELAXATION, SolverMethod.CG)
CAP = 300_000


@dataclass
class Run:
    report: SolveReport
    energies: list[float]
    seconds: float


def _solve(name: str, method: SolverMethod) -> Run:
    system = ReferenceExampleRepository().get(name).system
    records: list[IterationRecord] = []
    started = time.perf_counter()
    report = solve_system(
        system,
        SolverConfig(method=method, tolerance=1e-10, max_passes=CAP),
        observer=records.append,
    )
    return Run(report, [record.energy for record in records], time.perf_counter() - started)


@pytest.fixture(scope="module")
def runs() -> dict[tuple[str, SolverMethod], Run]:
    names = ("example_1a", "example_1b", "example_2", "example_3")
    return {(name, method): _solve(name, method) for name in names for method in METHODS}


def _deviation(report: SolveReport, expected) -> float:
    return float(np.max(np.abs(report.preferred_x - np.asarray(expected))))


@pytest.mark.parametrize("method", METHODS)
def test_regular_system_solved_by_both_methods(runs, method: SolverMethod) -> None:
    run = runs[("example_1a", method)]

    assert run.report.termination is Termination.CONVERGED
    assert _deviation(run.report, [1.0, 1.0, 1.0]) <= 1e-6
    assert run.seconds < 1.0


def test_large_coefficients_relaxation(runs) -> None:
    report = runs[("example_1b", SolverMethod.RELAXATION)].report

    assert report.termination is Termination.CONVERGED
    assert report.passes <= 50_000
    assert _deviation(report, [1.0, 1.5, 1.0]) <= 1e-5


def test_large_coefficients_cg(runs) -> None:
    report = runs[("example_1b", SolverMethod.CG)].report

    assert report.passes <= 50_000
    assert _deviation(report, [1.0, 1.5, 1.0]) <= 1e-3


@pytest.mark.parametrize("method", METHODS)
def test_duplicated_equation(runs, method: SolverMethod) -> None:
    report = runs[("example_2", method)].report

    assert report.termination is Termination.CONVERGED
    assert report.passes <= 100
    assert _deviation(report, [1 / 3, 1 / 3, 1 / 3]) <= 1e-4


@pytest.mark.parametrize("method", METHODS)
def test_ill_conditioned_overdetermined(runs, method: SolverMethod) -> None:
    run = runs[("example_3", method)]

    assert run.report.passes <= CAP
    assert _deviation(run.report, [0.998997, 2.0002, 0.0]) <= 1e-2
    assert run.seconds < 30.0


def test_ill_conditioned_oracle() -> None:
    system = ReferenceExampleRepository().get("example_3").system

    x = pinv_solve(system)

    assert np.allclose(x, [0.998997, 2.0002, 0.0], atol=1e-5, rtol=0.0)


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("name", ["example_1a", "example_1b", "example_2", "example_3"])
def test_energy_never_increases(runs, name: str, method: SolverMethod) -> None:
    energies = runs[(name, method)].energies

    assert energies
    for before, after in zip(energies, energies[1:]):
        assert after <= before + 1e-12 * (1.0 + abs(before))
