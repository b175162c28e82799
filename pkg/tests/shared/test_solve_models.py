from __future__ import annotations

import numpy as np
import pytest
from pydantic import ValidationError

from shared.errors import RejectedInputError
from shared.models import (
    BestIterate,
    LineSearch,
    SolveReport,
    SolverConfig,
    SolverMethod,
    Termination,
)


def _report(termination: Termination, best: BestIterate | None = None) -> SolveReport:
    return SolveReport(
        method=SolverMethod.CG,
        x=(1.0, 2.0),
        multipliers=(0.5,),
        residual_norm=0.1,
        solution_norm=5.0**0.5,
        passes=3,
        termination=termination,
        gradient_norm=0.01,
        best_residual=best,
    )


def test_config_defaults() -> None:
    config = SolverConfig()

    assert config.method is SolverMethod.RELAXATION
    assert config.line_search is LineSearch.PARABOLIC
    assert config.tolerance == 1e-10
    assert config.project_rhs is False


@pytest.mark.parametrize(
    "field, value",
    [("tolerance", 0.0), ("max_passes", 0), ("delta_scale", -1.0), ("rank_tolerance", 0.0)],
)
def test_config_rejects_out_of_range(field: str, value: float) -> None:
    with pytest.raises(RejectedInputError) as excinfo:
        SolverConfig.validated({field: value})

    assert excinfo.value.extensions["fields"] == [field]


def test_config_is_frozen_and_copies_validate() -> None:
    config = SolverConfig()

    with pytest.raises(ValidationError):
        config.tolerance = 1.0  # type: ignore[misc]
    updated = config.with_overrides(method="cg", line_search="exact")
    assert updated.method is SolverMethod.CG
    assert updated.line_search is LineSearch.EXACT
    with pytest.raises(RejectedInputError):
        config.with_overrides(max_passes=-3)


def test_report_accepts_field_names_and_aliases() -> None:
    by_alias = SolveReport.model_validate(
        {
            "method": "relaxation",
            "x": [1.0],
            "lambda": [-2.0],
            "residual_norm": 0.0,
            "solution_norm": 1.0,
            "passes": 1,
            "termination": "Converged",
            "gradient_norm": 0.0,
        }
    )

    assert by_alias.multipliers == (-2.0,)
    assert by_alias.termination is Termination.CONVERGED
    assert by_alias.x_array.dtype == np.float64


def test_preferred_x_uses_best_iterate_when_unconverged() -> None:
    best = BestIterate(x=(0.9, 2.1), passes=2, residual_norm=0.05)

    assert _report(Termination.MAX_PASSES, best).preferred_x.tolist() == [0.9, 2.1]
    assert _report(Termination.FLAT_DIRECTION).preferred_x.tolist() == [1.0, 2.0]
    assert _report(Termination.CONVERGED, best).preferred_x.tolist() == [1.0, 2.0]


def test_report_rejects_negative_norms() -> None:
    with pytest.raises(ValidationError):
        SolveReport(
            method=SolverMethod.CG,
            x=(1.0,),
            multipliers=(0.0,),
            residual_norm=-1.0,
            solution_norm=1.0,
            passes=0,
            termination=Termination.CONVERGED,
            gradient_norm=0.0,
        )
