"""Seeded random systems with a prescribed rank and singular-value spread."""

from __future__ import annotations

import math

import numpy as np

from shared.errors import RejectedInputError
from solvers.core import DenseMatrix, FloatVector, LinearSystem

__all__ = ["generate_system", "singular_values"]


def singular_values(rank: int, cond: float) -> FloatVector:
    """Geometric spread from 1 down to ``1 / cond``."""

    if rank == 1:
        return np.ones(1)
    return cond ** (-np.linspace(0.0, 1.0, rank))


def _orthonormal(rng: np.random.Generator, size: int, rank: int) -> FloatVector:
    q, r = np.linalg.qr(rng.standard_normal((size, rank)))
    return q * np.sign(np.diag(r))


def generate_system(
    rows: int,
    cols: int,
    rank: int,
    cond: float,
    seed: int,
    *,
    noise: float = 0.0,
) -> LinearSystem:
    """Return ``A = U diag(s) V^t`` with ``b = A x_true`` plus optional noise.

    ``cond`` is the ratio of the largest to the smallest nonzero singular value
    of ``A``. With ``noise > 0`` and ``rank < rows`` the system is inconsistent.
    The same arguments always produce the same system.
    """

    if rows < 1 or cols < 1:
        raise RejectedInputError(f"rows and cols must be positive, got {rows}x{cols}")
    if not 1 <= rank <= min(rows, cols):
        raise RejectedInputError(
            f"rank must lie in [1, {min(rows, cols)}], got {rank}",
            extensions={"rank": rank},
        )
    if not (math.isfinite(cond) and cond >= 1.0):
        raise RejectedInputError(f"cond must be a finite value >= 1, got {cond!r}")
    if not (math.isfinite(noise) and noise >= 0.0):
        raise RejectedInputError(f"noise must be a finite value >= 0, got {noise!r}")

    rng = np.random.default_rng(seed)
    left = _orthonormal(rng, rows, rank)
    right = _orthonormal(rng, cols, rank)
    matrix = (left * singular_values(rank, cond)) @ right.T
    x_true = rng.standard_normal(cols)
    rhs = matrix @ x_true
    if noise > 0.0:
        rhs = rhs + noise * rng.standard_normal(rows)
    return LinearSystem(DenseMatrix.from_array(matrix), rhs)
