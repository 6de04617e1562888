from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from src.app.errors import EmptyPolyhedronError
from src.linalg.roots import DEFAULT_PRECISION, inv_norm_upper, norm_upper
from src.linalg.subspaces import kernel_basis
from src.linalg.vectors import RatVector, Scalar, add, combine, is_zero_vector
from src.lp.polyhedron import Polyhedron
from src.lp.solvers import lp_feasible_point, lp_optimize
from src.polynomial.calculus import substitute_affine
from src.polynomial.sparse import SparsePolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineHull:
    """aff(P) = point + span(directions); directions pairwise orthogonal."""

    point: RatVector
    directions: Tuple[RatVector, ...]
    tight_rows: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.directions)


@dataclass(frozen=True)
class ReducedProblem:
    """f'(x') = f(v1 + B x'), P' = {(AB) x' <= b - A v1}."""

    f: SparsePolynomial
    P: Polyhedron
    offset: RatVector
    directions: Tuple[RatVector, ...]

    def lift(self, x: Sequence[Scalar]) -> RatVector:
        return add(self.offset, combine(x, self.directions, len(self.offset)))


def affine_hull(P: Polyhedron) -> AffineHull:
    """Implicit equalities by one LP per row: row i is tight on P iff min a_i.x = b_i."""
    feas = lp_feasible_point(P)
    if feas.status != "OPTIMAL":
        raise EmptyPolyhedronError("affine hull of an empty polyhedron", certificate=feas.certificate)
    tight = []
    for i, (a, bi) in enumerate(zip(P.A, P.b)):
        if is_zero_vector(a):
            continue
        out = lp_optimize(a, P)
        if out.status == "OPTIMAL" and out.value == bi:
            tight.append(i)
    directions = kernel_basis([P.A[i] for i in tight], n=P.n)
    logger.debug("affine hull", extra={"ctx": {"n": P.n, "tight_rows": tight, "dimension": len(directions)}})
    return AffineHull(feas.point, directions, tuple(tight))


def full_dim_reduce(f: SparsePolynomial, P: Polyhedron, hull: AffineHull) -> ReducedProblem:
    return ReducedProblem(
        f=substitute_affine(f, hull.directions, hull.point),
        P=P.pullback(hull.point, hull.directions),
        offset=hull.point,
        directions=hull.directions,
    )


def transfer_radius(R: Scalar, hull: AffineHull, precision: int = DEFAULT_PRECISION) -> Fraction:
    """R' with L^-1(aff(P) n B_R) inside B_R': (R + ||v1||) * sum 1/||d_i||."""
    R = Fraction(R)
    inv = sum((inv_norm_upper(d, precision) for d in hull.directions), Fraction(0))
    return (R + norm_upper(hull.point, precision)) * inv
