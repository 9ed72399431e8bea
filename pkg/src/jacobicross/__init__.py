"""Jacobi polynomials and radial spectral sums on compact rank-one symmetric spaces."""

from jacobicross.errors import DomainError, UnsupportedError
from jacobicross.special import JacobiParams, jacobi_eval, orthonormal_eval_all
from jacobicross.geometry import SymmetricSpace, parse_space, space_params

__all__ = [
    "DomainError",
    "UnsupportedError",
    "JacobiParams",
    "jacobi_eval",
    "orthonormal_eval_all",
    "SymmetricSpace",
    "parse_space",
    "space_params",
]
