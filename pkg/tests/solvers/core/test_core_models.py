from __future__ import annotations

import math

import numpy as np
import pytest

from shared.errors import RejectedInputError
from solvers.core import DenseMatrix, LinearSystem, as_vector


def test_from_rows_stores_row_major_entries() -> None:
    matrix = DenseMatrix.from_rows([[1, 2, 3], [4, 5, 6]])

    assert matrix.shape == (2, 3)
    assert matrix.entries.tolist() == [1.0, 2.0, 3.0, 4.0, 5.0, 6.0]
    assert matrix[1, 0] == 4.0
    assert matrix.row(1).tolist() == [4.0, 5.0, 6.0]


def test_entries_are_read_only_copies() -> None:
    source = np.array([[1.0, 2.0], [3.0, 4.0]])
    matrix = DenseMatrix.from_array(source)
    source[0, 0] = 99.0

    assert matrix[0, 0] == 1.0
    with pytest.raises(ValueError):
        matrix.array[0, 0] = 5.0


@pytest.mark.parametrize(
    "rows",
    [
        [],
        [[1, 2], [3]],
        [[1, math.nan]],
        [[1, math.inf]],
        [["a", 1]],
    ],
)
def test_from_rows_rejects_invalid_input(rows) -> None:
    with pytest.raises(RejectedInputError):
        DenseMatrix.from_rows(rows)


def test_entries_length_must_match_dimensions() -> None:
    with pytest.raises(RejectedInputError):
        DenseMatrix(2, 2, np.zeros(3))


@pytest.mark.parametrize("rows, cols", [(0, 1), (1, 0), (-1, 2), (True, 1)])
def test_dimensions_must_be_positive_integers(rows, cols) -> None:
    with pytest.raises(RejectedInputError):
        DenseMatrix(rows, cols, np.zeros(1))


def test_identity() -> None:
    assert DenseMatrix.identity(3).array.tolist() == np.eye(3).tolist()


def test_linear_system_validates_rhs() -> None:
    matrix = DenseMatrix.identity(2)

    with pytest.raises(RejectedInputError):
        LinearSystem(matrix, np.zeros(3))
    with pytest.raises(RejectedInputError):
        LinearSystem(matrix, np.array([1.0, math.inf]))


def test_linear_system_exposes_dimensions(example_3) -> None:
    assert (example_3.rows, example_3.cols) == (4, 3)
    assert not example_3.rhs.flags.writeable


def test_as_vector_reports_expected_length() -> None:
    with pytest.raises(RejectedInputError) as excinfo:
        as_vector([1.0, 2.0], 3, name="x")

    assert excinfo.value.extensions == {"expected": 3, "actual": 2}
    assert "x has length 2" in str(excinfo.value)
