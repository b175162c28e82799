"""Dense matrix/vector types and elementary linear operations."""

from .linalg import matvec, matvec_transpose, norm1, norm2, residual
from .models import DenseMatrix, FloatVector, LinearSystem, as_vector

__all__ = [
    "DenseMatrix",
    "FloatVector",
    "LinearSystem",
    "as_vector",
    "matvec",
    "matvec_transpose",
    "norm1",
    "norm2",
    "residual",
]
