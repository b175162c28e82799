"""The Gram operator ``[w] = [A][A]^t`` in explicit and implicit form."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike

from shared.errors import RejectedInputError
from solvers.core import DenseMatrix, FloatVector, as_vector, matvec, matvec_transpose

__all__ = [
    "DEFAULT_EXPLICIT_THRESHOLD",
    "GramOperator",
    "gram_apply",
    "gram_entry",
    "gram_matrix",
]

DEFAULT_EXPLICIT_THRESHOLD = 512


def _check_index(value: int, size: int, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise RejectedInputError(f"{name} must be an integer index, got {value!r}")
    if not 0 <= value < size:
        raise RejectedInputError(
            f"{name}={value} is out of range for {size} equations",
            extensions={"index": int(value), "size": size},
        )
    return int(value)


def gram_entry(A: DenseMatrix, l: int, m: int) -> float:
    """Return ``w_lm``, the dot product of rows ``l`` and ``m`` of ``A``."""

    row_l = _check_index(l, A.rows, "l")
    row_m = _check_index(m, A.rows, "m")
    return float(np.dot(A.row(row_l), A.row(row_m)))


def gram_matrix(A: DenseMatrix) -> DenseMatrix:
    """Return the explicit symmetric ``M x M`` Gram matrix.

    The upper triangle is computed and mirrored so the result is exactly
    symmetric.
    """

    product = A.array @ A.array.T
    upper = np.triu(product)
    return DenseMatrix.from_array(upper + np.triu(upper, 1).T)


def gram_apply(A: DenseMatrix, v: ArrayLike) -> FloatVector:
    """Return ``[w] v`` as ``A (A^t v)`` without forming ``[w]``."""

    return matvec(A, matvec_transpose(A, v))


@dataclass(frozen=True, eq=False)
class GramOperator:
    """``[w]`` for a coefficient matrix, optionally cached as an explicit matrix.

    All caches are computed at construction and never mutated afterwards.
    """

    source: DenseMatrix
    explicit: DenseMatrix | None = None
    diagonal: FloatVector = field(init=False, repr=False)

    def __post_init__(self) -> None:
        size = self.source.rows
        if self.explicit is not None:
            if self.explicit.shape != (size, size):
                raise RejectedInputError(
                    f"explicit Gram matrix must be {size}x{size}, got "
                    f"{self.explicit.rows}x{self.explicit.cols}"
                )
            values = self.explicit.array
            if not np.array_equal(values, values.T):
                raise RejectedInputError("explicit Gram matrix must be exactly symmetric")
            diagonal = np.diag(values).copy()
            if np.any(diagonal < 0.0):
                raise RejectedInputError("explicit Gram matrix has a negative diagonal")
        else:
            rows = self.source.array
            diagonal = np.einsum("ij,ij->i", rows, rows)
        diagonal.setflags(write=False)
        object.__setattr__(self, "diagonal", diagonal)

    @classmethod
    def build(
        cls,
        A: DenseMatrix,
        *,
        explicit_threshold: int = DEFAULT_EXPLICIT_THRESHOLD,
    ) -> "GramOperator":
        """Cache ``[w]`` explicitly when ``A.rows <= explicit_threshold``."""

        explicit = gram_matrix(A) if A.rows <= explicit_threshold else None
        return cls(A, explicit)

    @property
    def size(self) -> int:
        return self.source.rows

    @property
    def is_explicit(self) -> bool:
        return self.explicit is not None

    @property
    def scale(self) -> float:
        """Largest diagonal entry; an upper bound for every ``|w_lm|``."""

        return float(np.max(self.diagonal)) if self.diagonal.size else 0.0

    @property
    def zero_rows(self) -> tuple[int, ...]:
        """Indices of all-zero equations (``w_kk == 0``)."""

        return tuple(int(k) for k in np.flatnonzero(self.diagonal == 0.0))

    def apply(self, v: ArrayLike) -> FloatVector:
        """Return ``[w] v``."""

        vector = as_vector(v, self.size, name="v")
        if self.explicit is not None:
            return self.explicit.array @ vector
        return self.source.array @ (self.source.array.T @ vector)

    def row(self, k: int) -> FloatVector:
        """Return ``w_k``, the ``k``-th row (equivalently column) of ``[w]``."""

        index = _check_index(k, self.size, "k")
        if self.explicit is not None:
            return self.explicit.array[index]
        return self.source.array @ self.source.array[index]
