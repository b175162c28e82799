from __future__ import annotations

import numpy as np
import pytest

from shared.errors import RejectedInputError
from solvers.core import (
    DenseMatrix,
    LinearSystem,
    matvec,
    matvec_transpose,
    norm1,
    norm2,
    residual,
)

EXAMPLE_1A = DenseMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])


@pytest.mark.parametrize(
    "matrix, x, expected",
    [
        (DenseMatrix.identity(3), [2, 5, 7], [2, 5, 7]),
        (EXAMPLE_1A, [1, 1, 1], [2, 2, 2]),
        (DenseMatrix.from_rows([[3, 4]]), [1, 1], [7]),
    ],
)
def test_matvec(matrix, x, expected) -> None:
    assert matvec(matrix, x).tolist() == expected


@pytest.mark.parametrize(
    "matrix, y, expected",
    [
        (DenseMatrix.identity(3), [1, 2, 3], [1, 2, 3]),
        (EXAMPLE_1A, [1, 0, 0], [1, 1, 0]),
        (EXAMPLE_1A, [0.5, 0.5, 0.5], [1, 1, 1]),
    ],
)
def test_matvec_transpose(matrix, y, expected) -> None:
    assert matvec_transpose(matrix, y).tolist() == expected


def test_dimension_mismatch_is_rejected() -> None:
    with pytest.raises(RejectedInputError):
        matvec(EXAMPLE_1A, [1, 2])
    with pytest.raises(RejectedInputError):
        matvec_transpose(EXAMPLE_1A, [1, 2, 3, 4])


def test_residual(example_1a) -> None:
    assert residual(example_1a, [1, 1, 1]).tolist() == [0, 0, 0]
    assert residual(example_1a, [0, 0, 0]).tolist() == [-2, -2, -2]


def test_residual_plus_rhs_reproduces_product() -> None:
    rng = np.random.default_rng(3)
    system = LinearSystem(DenseMatrix.from_array(rng.uniform(-1, 1, (4, 6))), rng.uniform(-1, 1, 4))
    x = rng.uniform(-1, 1, 6)

    assert np.array_equal(residual(system, x) + system.rhs, matvec(system.matrix, x))


def test_norms() -> None:
    assert norm2([3, 4]) == 5.0
    assert norm1([-1, 2, -3]) == 6.0
    assert norm2(np.zeros(4)) == 0.0
    assert norm1(np.zeros(4)) == 0.0


def test_adjoint_identity_on_random_instances() -> None:
    rng = np.random.default_rng(11)
    for _ in range(50):
        rows, cols = rng.integers(1, 21, size=2)
        matrix = DenseMatrix.from_array(rng.uniform(-1, 1, (rows, cols)))
        x = rng.uniform(-1, 1, cols)
        y = rng.uniform(-1, 1, rows)
        left = float(np.dot(matvec(matrix, x), y))
        right = float(np.dot(x, matvec_transpose(matrix, y)))
        assert left == pytest.approx(right, rel=1e-12, abs=1e-12)
        assert float(np.dot(matvec_transpose(matrix, matvec(matrix, x)), x)) >= 0.0
