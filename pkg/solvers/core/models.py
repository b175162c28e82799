"""Dense matrix and linear system value types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from shared.errors import RejectedInputError

FloatVector = NDArray[np.float64]


def _frozen(values: NDArray[np.float64]) -> NDArray[np.float64]:
    values.setflags(write=False)
    return values


def as_vector(values: ArrayLike, length: int | None = None, *, name: str = "vector") -> FloatVector:
    """Return ``values`` as a finite one-dimensional float64 array.

    Raises :class:`RejectedInputError` when the shape or length does not match
    or when an entry is NaN or infinite.
    """

    try:
        vector = np.asarray(values, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise RejectedInputError(f"{name} is not a real vector") from exc
    if vector.ndim != 1:
        raise RejectedInputError(
            f"{name} must be one-dimensional, got shape {vector.shape}"
        )
    if length is not None and vector.shape[0] != length:
        raise RejectedInputError(
            f"{name} has length {vector.shape[0]}, expected {length}",
            extensions={"expected": length, "actual": int(vector.shape[0])},
        )
    if not np.all(np.isfinite(vector)):
        raise RejectedInputError(f"{name} contains non-finite entries")
    return vector


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Row-major real ``rows x cols`` coefficient matrix.

    ``entries`` holds ``rows * cols`` finite doubles in row-major order; the
    two-dimensional read-only view is available as :attr:`array`.
    """

    rows: int
    cols: int
    entries: FloatVector

    def __post_init__(self) -> None:
        if isinstance(self.rows, bool) or not isinstance(self.rows, (int, np.integer)) or self.rows < 1:
            raise RejectedInputError(f"rows must be a positive integer, got {self.rows!r}")
        if isinstance(self.cols, bool) or not isinstance(self.cols, (int, np.integer)) or self.cols < 1:
            raise RejectedInputError(f"cols must be a positive integer, got {self.cols!r}")
        entries = as_vector(self.entries, int(self.rows) * int(self.cols), name="entries")
        object.__setattr__(self, "rows", int(self.rows))
        object.__setattr__(self, "cols", int(self.cols))
        object.__setattr__(self, "entries", _frozen(entries.copy()))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "DenseMatrix":
        """Build a matrix from a sequence of equally long rows."""

        lengths = {len(row) for row in rows}
        if not rows or len(lengths) != 1:
            raise RejectedInputError("rows must be a non-empty sequence of equal-length rows")
        width = lengths.pop()
        flat = [value for row in rows for value in row]
        return cls(len(rows), width, as_vector(flat, name="entries"))

    @classmethod
    def from_array(cls, values: ArrayLike) -> "DenseMatrix":
        """Build a matrix from a two-dimensional array-like."""

        array = np.asarray(values, dtype=np.float64)
        if array.ndim != 2:
            raise RejectedInputError(f"matrix must be two-dimensional, got shape {array.shape}")
        return cls(array.shape[0], array.shape[1], array.reshape(-1))

    @classmethod
    def identity(cls, size: int) -> "DenseMatrix":
        """Return the ``size x size`` identity matrix."""

        return cls.from_array(np.eye(size))

    @property
    def array(self) -> NDArray[np.float64]:
        """Read-only ``(rows, cols)`` view of the entries."""

        return self.entries.reshape(self.rows, self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, index: int) -> FloatVector:
        return self.array[index]

    def __getitem__(self, key: tuple[int, int]) -> float:
        row, col = key
        return float(self.array[row, col])


@dataclass(frozen=True, eq=False)
class LinearSystem:
    """The problem instance ``[A] x = b``."""

    matrix: DenseMatrix
    rhs: FloatVector

    def __post_init__(self) -> None:
        if not isinstance(self.matrix, DenseMatrix):
            raise RejectedInputError("matrix must be a DenseMatrix")
        rhs = as_vector(self.rhs, self.matrix.rows, name="rhs")
        object.__setattr__(self, "rhs", _frozen(rhs.copy()))

    @classmethod
    def from_lists(
        cls, rows: Sequence[Sequence[float]], rhs: Sequence[float]
    ) -> "LinearSystem":
        return cls(DenseMatrix.from_rows(rows), np.asarray(rhs, dtype=np.float64))

    @property
    def rows(self) -> int:
        return self.matrix.rows

    @property
    def cols(self) -> int:
        return self.matrix.cols


__all__ = ["DenseMatrix", "FloatVector", "LinearSystem", "as_vector"]
