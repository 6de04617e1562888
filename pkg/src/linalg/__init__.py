from __future__ import annotations

"""
Exact rational linear algebra:
- vectors and matrices as tuples of Fractions
- Hermite normal form, Gram-Schmidt, kernels, inverse-image split
- determinants, definiteness, eigenvalue lower bounds, square-root bounds
"""

from src.linalg.determinants import bareiss_det, is_positive_definite, lambda_min_lower_bound, ldlt_definiteness
from src.linalg.hnf import HnfResult, hnf_decompose
from src.linalg.roots import inv_norm_upper, norm_upper, sqrt_bounds, sqrt_upper
from src.linalg.subspaces import GramSchmidtResult, InverseImageSplit, gram_schmidt, inverse_image_split, kernel_basis
from src.linalg.vectors import RatMatrix, RatVector

__all__ = [
    "GramSchmidtResult",
    "HnfResult",
    "InverseImageSplit",
    "RatMatrix",
    "RatVector",
    "bareiss_det",
    "gram_schmidt",
    "hnf_decompose",
    "inv_norm_upper",
    "inverse_image_split",
    "is_positive_definite",
    "kernel_basis",
    "lambda_min_lower_bound",
    "ldlt_definiteness",
    "norm_upper",
    "sqrt_bounds",
    "sqrt_upper",
]
