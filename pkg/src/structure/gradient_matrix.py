from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from src.linalg.vectors import RatMatrix, RatVector
from src.polynomial.calculus import gradient_polynomials
from src.polynomial.sparse import Exponent, SparsePolynomial


@dataclass(frozen=True)
class GradientMatrix:
    """
    Coefficients of the partial derivatives over a common support.

    Row r of `mat` is the monomial support[r]; column i expands df/dx_i.
    support[0] is always the zero exponent, so `one_vector` is e_0.
    """

    support: Tuple[Exponent, ...]
    mat: RatMatrix
    one_vector: RatVector

    @property
    def n(self) -> int:
        return len(self.mat[0]) if self.mat else 0


def build_gradient_matrix(f: SparsePolynomial) -> GradientMatrix:
    grads = gradient_polynomials(f)
    zero = (0,) * f.n
    rest = sorted({alpha for g in grads for alpha in g.terms} - {zero})
    support = (zero,) + tuple(rest)
    mat = tuple(tuple(g.coefficient(alpha) for g in grads) for alpha in support)
    one = tuple(Fraction(int(r == 0)) for r in range(len(support)))
    return GradientMatrix(support, mat, one)
