from __future__ import annotations

import numpy as np
import pytest

from shared.models import IterationRecord, SolverConfig, SolverMethod, Termination
from solvers.dispatch import attach_oracle, solve_system


@pytest.mark.parametrize("method", [SolverMethod.RELAXATION, SolverMethod.CG])
def test_routes_to_configured_backend(example_1a, method: SolverMethod) -> None:
    report = solve_system(example_1a, SolverConfig(method=method))

    assert report.method is method
    assert report.termination is Termination.CONVERGED
    assert np.allclose(report.x_array, [1.0, 1.0, 1.0], atol=1e-8)
    assert report.oracle is None


def test_observer_is_forwarded(example_2) -> None:
    records: list[IterationRecord] = []

    report = solve_system(example_2, SolverConfig(), observer=records.append)

    assert [record.passes for record in records] == list(range(1, report.passes + 1))


def test_oracle_attached_on_request(example_2) -> None:
    report = solve_system(example_2, SolverConfig(method=SolverMethod.CG), with_oracle=True)

    assert report.oracle is not None
    assert np.allclose(report.oracle.x, [1 / 3, 1 / 3, 1 / 3], atol=1e-12)
    assert report.oracle.deviation == pytest.approx(
        float(np.linalg.norm(report.x_array - np.array(report.oracle.x))), abs=1e-15
    )
    assert report.oracle.deviation < 1e-8


def test_attach_oracle_leaves_original_untouched(example_1a) -> None:
    report = solve_system(example_1a, SolverConfig())

    with_oracle = attach_oracle(report, example_1a)

    assert report.oracle is None
    assert with_oracle.x == report.x
    assert with_oracle.oracle.deviation < 1e-8
