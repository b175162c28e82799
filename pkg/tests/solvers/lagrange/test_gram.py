from __future__ import annotations

import numpy as np
import pytest

from shared.errors import RejectedInputError
from solvers.core import DenseMatrix
from solvers.lagrange import GramOperator, gram_apply, gram_entry, gram_matrix

EXAMPLE_1A = DenseMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])


def test_gram_entry() -> None:
    assert gram_entry(EXAMPLE_1A, 0, 0) == 2.0
    assert gram_entry(EXAMPLE_1A, 0, 1) == 1.0
    identity = DenseMatrix.identity(3)
    assert gram_entry(identity, 2, 2) == 1.0
    assert gram_entry(identity, 0, 2) == 0.0


@pytest.mark.parametrize("l, m", [(3, 0), (0, -1), (1.0, 0)])
def test_gram_entry_rejects_bad_indices(l, m) -> None:
    with pytest.raises(RejectedInputError):
        gram_entry(EXAMPLE_1A, l, m)


def test_gram_matrix_examples() -> None:
    assert gram_matrix(EXAMPLE_1A).array.tolist() == [[2, 1, 1], [1, 2, 1], [1, 1, 2]]
    assert gram_matrix(DenseMatrix.identity(4)).array.tolist() == np.eye(4).tolist()

    with_zero_row = DenseMatrix.from_rows([[1, 2], [0, 0], [3, 1]])
    w = gram_matrix(with_zero_row).array
    assert w[1].tolist() == [0, 0, 0]
    assert w[:, 1].tolist() == [0, 0, 0]


def test_gram_matrix_is_exactly_symmetric_and_matches_entries() -> None:
    rng = np.random.default_rng(5)
    A = DenseMatrix.from_array(rng.uniform(-1, 1, (7, 4)))
    w = gram_matrix(A).array

    assert np.array_equal(w, w.T)
    for l in range(7):
        for m in range(l, 7):
            assert w[l, m] == pytest.approx(gram_entry(A, l, m), rel=1e-14, abs=1e-14)


def test_gram_apply_examples() -> None:
    assert gram_apply(EXAMPLE_1A, [0, 0, 0]).tolist() == [0, 0, 0]
    assert gram_apply(EXAMPLE_1A, [1, 1, 1]).tolist() == [4, 4, 4]
    assert gram_apply(DenseMatrix.identity(3), [1, -2, 3]).tolist() == [1, -2, 3]
    with pytest.raises(RejectedInputError):
        gram_apply(EXAMPLE_1A, [1, 1])


def test_gram_apply_agrees_with_explicit_product() -> None:
    rng = np.random.default_rng(17)
    for _ in range(20):
        rows, cols = rng.integers(1, 51, size=2)
        A = DenseMatrix.from_array(rng.uniform(-1, 1, (rows, cols)))
        v = rng.uniform(-1, 1, rows)
        explicit = gram_matrix(A).array @ v
        implicit = gram_apply(A, v)
        scale = np.linalg.norm(explicit) + 1.0
        assert np.linalg.norm(explicit - implicit) <= 1e-12 * scale
        assert float(np.dot(v, implicit)) >= 0.0


def test_operator_chooses_storage_by_threshold() -> None:
    A = DenseMatrix.from_array(np.arange(12.0).reshape(4, 3))

    explicit = GramOperator.build(A, explicit_threshold=4)
    implicit = GramOperator.build(A, explicit_threshold=3)

    assert explicit.is_explicit and not implicit.is_explicit
    assert np.array_equal(explicit.diagonal, implicit.diagonal)
    v = np.array([1.0, -1.0, 0.5, 2.0])
    assert np.allclose(explicit.apply(v), implicit.apply(v), rtol=1e-12)
    assert np.allclose(explicit.row(2), implicit.row(2), rtol=1e-12)
    assert explicit.scale == pytest.approx(float(np.max(explicit.diagonal)))


def test_operator_reports_zero_rows() -> None:
    A = DenseMatrix.from_rows([[0, 0], [1, 2], [0, 0]])

    assert GramOperator.build(A).zero_rows == (0, 2)


def test_operator_rejects_inconsistent_explicit_matrix() -> None:
    with pytest.raises(RejectedInputError):
        GramOperator(EXAMPLE_1A, DenseMatrix.identity(2))
    with pytest.raises(RejectedInputError):
        GramOperator(EXAMPLE_1A, DenseMatrix.from_rows([[1, 2, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(RejectedInputError):
        GramOperator(EXAMPLE_1A, DenseMatrix.from_rows([[-1, 0, 0], [0, 1, 0], [0, 0, 1]]))
