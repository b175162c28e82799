"""Cyclic Jacobi eigendecomposition of symmetric matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from shared.errors import RejectedInputError
from shared.observability import get_logger
from solvers.core import DenseMatrix, FloatVector

__all__ = ["EigenDecomposition", "MAX_SWEEPS", "jacobi_eigen"]

logger = get_logger(__name__)

MAX_SWEEPS = 100
SYMMETRY_TOLERANCE = 1e-12
OFF_DIAGONAL_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Eigenvalues in descending order and the matching orthonormal eigenvectors.

    Column ``j`` of ``vectors`` belongs to ``values[j]``.
    """

    values: FloatVector
    vectors: DenseMatrix
    sweeps: int = 0
    converged: bool = True

    @property
    def size(self) -> int:
        return int(self.values.shape[0])

    def column(self, j: int) -> FloatVector:
        return self.vectors.array[:, j]


def _max_off_diagonal(a: np.ndarray) -> float:
    if a.shape[0] < 2:
        return 0.0
    return float(np.max(np.abs(a[~np.eye(a.shape[0], dtype=bool)])))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def jacobi_eigen(W: DenseMatrix, *, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    """Diagonalize the symmetric matrix ``W`` with cyclic Jacobi rotations.

    Sweeps visit every pair ``p < q`` in row order and stop once all
    off-diagonal magnitudes are at most ``1e-12 * |W|_F``. Hitting
    ``max_sweeps`` logs a warning and returns the current approximation.
    """

    if W.rows != W.cols:
        raise RejectedInputError(f"matrix must be square, got {W.rows}x{W.cols}")
    a = W.array.copy()
    scale = max(1.0, float(np.max(np.abs(a))))
    asymmetry = float(np.max(np.abs(a - a.T)))
    if asymmetry > SYMMETRY_TOLERANCE * scale:
        raise RejectedInputError(
            "matrix is not symmetric",
            extensions={"asymmetry": asymmetry},
        )
    a = 0.5 * (a + a.T)
    size = W.rows
    v = np.eye(size, dtype=np.float64)
    threshold = OFF_DIAGONAL_TOLERANCE * float(np.linalg.norm(a, "fro"))

    sweeps = 0
    converged = _max_off_diagonal(a) <= threshold
    while not converged and sweeps < max_sweeps:
        sweeps += 1
        for p in range(size - 1):
            for q in range(p + 1, size):
                if a[p, q] != 0.0:
                    _rotate(a, v, p, q)
        converged = _max_off_diagonal(a) <= threshold

    if not converged:
        logger.warning(
            "jacobi_not_converged",
            size=size,
            sweeps=sweeps,
            off_diagonal=_max_off_diagonal(a),
            threshold=threshold,
        )

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    values.setflags(write=False)
    return EigenDecomposition(
        values=values,
        vectors=DenseMatrix.from_array(v[:, order]),
        sweeps=sweeps,
        converged=converged,
    )
