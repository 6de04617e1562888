from __future__ import annotations

"""
Exact sparse polynomials:
- the SparsePolynomial type, evaluation, encoding length
- derivatives and affine substitution
- JSON parsing
"""

from src.polynomial.calculus import (
    directional_derivative,
    gradient_at,
    gradient_polynomials,
    hessian_at,
    hessian_polynomials,
    partial_derivative,
    substitute_affine,
)
from src.polynomial.parsing import parse_polynomial, polynomial_to_doc
from src.polynomial.sparse import SparsePolynomial, encoding_length, evaluate

__all__ = [
    "SparsePolynomial",
    "directional_derivative",
    "encoding_length",
    "evaluate",
    "gradient_at",
    "gradient_polynomials",
    "hessian_at",
    "hessian_polynomials",
    "parse_polynomial",
    "partial_derivative",
    "polynomial_to_doc",
    "substitute_affine",
]
