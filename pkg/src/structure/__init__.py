from __future__ import annotations

"""
Structure of a convex polynomial: f(x) = fhat(Ux) - <w,x> with a strongly
convex quadratic lower bound on fhat.
"""

from src.structure.decomposition import StructureDecomposition, decompose
from src.structure.definite_point import find_definite_point
from src.structure.gradient_matrix import GradientMatrix, build_gradient_matrix
from src.structure.lower_bound import QuadraticLowerBound, lower_bound_at
from src.structure.pipeline import StructureResult, structure_with_bound

__all__ = [
    "GradientMatrix",
    "QuadraticLowerBound",
    "StructureDecomposition",
    "StructureResult",
    "build_gradient_matrix",
    "decompose",
    "find_definite_point",
    "lower_bound_at",
    "structure_with_bound",
]
