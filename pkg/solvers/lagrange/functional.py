"""The multiplier functional, its gradient and recovery of ``x``.

Reported quantities use the multipliers ``lambda``. The solvers iterate on
the scaled multipliers ``mu = -lambda / 2`` against the symmetric positive
semidefinite system ``[w] mu = b``; the stationarity condition of ``phi`` is
exactly that system. The functional they minimize is

    E(mu) = 0.5 <mu, [w] mu> - <mu, b>  ==  -phi(lambda) / 2,

so a decrease of ``E`` is an increase of ``phi``. Both scalings are
powers of two, hence conversions between ``lambda`` and ``mu`` are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from shared.errors import RejectedInputError
from solvers.core import DenseMatrix, FloatVector, as_vector, matvec_transpose

from .gram import GramOperator, gram_apply

__all__ = [
    "MultiplierState",
    "energy",
    "energy_gradient",
    "internal_from_multipliers",
    "multipliers_from_internal",
    "phi",
    "phi_gradient",
    "recover_x",
]


@dataclass(frozen=True, eq=False)
class MultiplierState:
    """Lagrange multipliers ``lambda`` and the number of completed passes."""

    multipliers: FloatVector
    passes: int = 0

    def __post_init__(self) -> None:
        values = as_vector(self.multipliers, name="lambda").copy()
        values.setflags(write=False)
        object.__setattr__(self, "multipliers", values)
        if isinstance(self.passes, bool) or self.passes < 0:
            raise RejectedInputError(f"passes must be non-negative, got {self.passes!r}")

    @classmethod
    def zeros(cls, size: int) -> "MultiplierState":
        """Starting point of every solve, all multipliers zero."""

        return cls(np.zeros(size, dtype=np.float64))

    @classmethod
    def from_internal(cls, mu: ArrayLike, passes: int) -> "MultiplierState":
        return cls(multipliers_from_internal(mu), passes)

    @property
    def size(self) -> int:
        return int(self.multipliers.shape[0])

    @property
    def internal(self) -> FloatVector:
        """The scaled multipliers ``mu = -lambda / 2``."""

        return internal_from_multipliers(self.multipliers)


def multipliers_from_internal(mu: ArrayLike) -> FloatVector:
    return -2.0 * np.asarray(mu, dtype=np.float64)


def internal_from_multipliers(multipliers: ArrayLike) -> FloatVector:
    return -0.5 * np.asarray(multipliers, dtype=np.float64)


def recover_x(A: DenseMatrix, multipliers: ArrayLike) -> FloatVector:
    """Return ``x_n = -0.5 * sum_m lambda_m a_mn``."""

    return -0.5 * matvec_transpose(A, multipliers)


def phi(A: DenseMatrix, b: ArrayLike, multipliers: ArrayLike) -> float:
    """Evaluate ``-0.25 <lambda [w] lambda> - <lambda b>``."""

    lam = as_vector(multipliers, A.rows, name="lambda")
    rhs = as_vector(b, A.rows, name="b")
    return float(-0.25 * np.dot(lam, gram_apply(A, lam)) - np.dot(lam, rhs))


def phi_gradient(A: DenseMatrix, b: ArrayLike, multipliers: ArrayLike) -> FloatVector:
    """Return the exact gradient ``-0.5 [w] lambda - b`` of :func:`phi`."""

    lam = as_vector(multipliers, A.rows, name="lambda")
    rhs = as_vector(b, A.rows, name="b")
    return -0.5 * gram_apply(A, lam) - rhs


def energy(gram: GramOperator, b: FloatVector, mu: FloatVector) -> float:
    """Evaluate the minimized functional ``E(mu)``."""

    return float(0.5 * np.dot(mu, gram.apply(mu)) - np.dot(mu, b))


def energy_gradient(gram: GramOperator, b: FloatVector, mu: FloatVector) -> FloatVector:
    """Return ``[w] mu - b``, which equals ``phi_gradient(lambda)`` up to rounding."""

    return gram.apply(mu) - b
