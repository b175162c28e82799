"""Moore-Penrose solve through the eigendecomposition of the Gram matrix."""

from __future__ import annotations

import numpy as np

from shared.errors import RejectedInputError
from solvers.core import FloatVector, LinearSystem, norm2, residual
from solvers.lagrange import gram_matrix

from .jacobi import jacobi_eigen

__all__ = ["default_rank_tolerance", "least_squares_residual", "pinv_solve"]


def default_rank_tolerance(rows: int) -> float:
    return 1e-12 * rows


def pinv_solve(system: LinearSystem, rank_tolerance: float | None = None) -> FloatVector:
    """Return the minimum-norm least-squares solution ``A^t ([A][A]^t)^+ b``.

    Eigenvalues of the Gram matrix at or below ``rank_tolerance`` times the
    largest eigenvalue are treated as zero.
    """

    tolerance = (
        default_rank_tolerance(system.rows) if rank_tolerance is None else float(rank_tolerance)
    )
    if not tolerance > 0.0:
        raise RejectedInputError(f"rank_tolerance must be positive, got {rank_tolerance!r}")

    decomposition = jacobi_eigen(gram_matrix(system.matrix))
    values = decomposition.values
    largest = float(values[0])
    inverse = np.zeros_like(values)
    if largest > 0.0:
        keep = values > tolerance * largest
        inverse[keep] = 1.0 / values[keep]

    V = decomposition.vectors.array
    mu = V @ (inverse * (V.T @ system.rhs))
    return system.matrix.array.T @ mu


def least_squares_residual(system: LinearSystem, rank_tolerance: float | None = None) -> float:
    """Residual norm ``|A x* - b|`` of the pseudoinverse solution."""

    return norm2(residual(system, pinv_solve(system, rank_tolerance)))
