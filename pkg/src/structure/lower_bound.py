from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.app.errors import NotPositiveDefiniteError
from src.linalg.determinants import lambda_min_lower_bound, ldlt_definiteness
from src.linalg.vectors import RatVector, Scalar, as_vector, dot, norm_sq, scale, sub
from src.polynomial.calculus import gradient_at, hessian_at
from src.polynomial.sparse import SparsePolynomial, evaluate


@dataclass(frozen=True)
class QuadraticLowerBound:
    """q(y) = value + <grad, y - a> + quad_coeff * ||y - a||^2, a global under-estimator of f."""

    a: RatVector
    value: Fraction
    grad: RatVector
    lambda_hat: Fraction
    degree: int
    mu: Fraction
    quad_coeff: Fraction

    def value_at(self, y: Sequence[Scalar]) -> Fraction:
        d = sub(y, self.a)
        return self.value + dot(self.grad, d) + self.quad_coeff * norm_sq(d)

    def value_at_zero(self) -> Fraction:
        return self.value - dot(self.grad, self.a) + self.quad_coeff * norm_sq(self.a)

    def gradient_at_zero(self) -> RatVector:
        return sub(self.grad, scale(2 * self.quad_coeff, self.a))


def lower_bound_at(f: SparsePolynomial, a: Sequence[Scalar]) -> QuadraticLowerBound:
    a = as_vector(a)
    H = hessian_at(f, a)
    if ldlt_definiteness(H) != "POSITIVE_DEFINITE":
        raise NotPositiveDefiniteError(f"Hessian at {tuple(str(v) for v in a)} is not positive definite")
    lam = lambda_min_lower_bound(H)
    d = f.degree
    return QuadraticLowerBound(
        a=a,
        value=evaluate(f, a),
        grad=gradient_at(f, a),
        lambda_hat=lam,
        degree=d,
        mu=lam / (2 * d * d),
        quad_coeff=lam / (4 * d * d),
    )
