"""Reference eigendecomposition and pseudoinverse solver."""

from .jacobi import MAX_SWEEPS, EigenDecomposition, jacobi_eigen
from .pinv import default_rank_tolerance, least_squares_residual, pinv_solve

__all__ = [
    "EigenDecomposition",
    "MAX_SWEEPS",
    "default_rank_tolerance",
    "jacobi_eigen",
    "least_squares_residual",
    "pinv_solve",
]
