"""Elementary dense linear operations consumed by every solver module."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from .models import DenseMatrix, FloatVector, LinearSystem, as_vector

__all__ = ["matvec", "matvec_transpose", "norm1", "norm2", "residual"]


def matvec(A: DenseMatrix, x: ArrayLike) -> FloatVector:
    """Return ``[A] x`` (length ``A.rows``)."""

    vector = as_vector(x, A.cols, name="x")
    return A.array @ vector


def matvec_transpose(A: DenseMatrix, y: ArrayLike) -> FloatVector:
    """Return ``[A]^t y`` (length ``A.cols``)."""

    vector = as_vector(y, A.rows, name="y")
    return A.array.T @ vector


def residual(system: LinearSystem, x: ArrayLike) -> FloatVector:
    """Return the defect ``[A] x - b`` componentwise."""

    return matvec(system.matrix, x) - system.rhs


def norm2(v: ArrayLike) -> float:
    """Euclidean norm."""

    return float(np.linalg.norm(np.asarray(v, dtype=np.float64)))


def norm1(v: ArrayLike) -> float:
    """Sum of absolute values."""

    return float(np.sum(np.abs(np.asarray(v, dtype=np.float64))))
