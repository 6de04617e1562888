from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from src.app.errors import EllipsoidContractError
from src.ellipsoid.method import ellipsoid_feasibility
from src.ellipsoid.oracles import IntersectionOracle, oracle_ball, oracle_polyhedron, oracle_sublevel
from src.ellipsoid.reduction import affine_hull, full_dim_reduce, transfer_radius
from src.linalg.roots import DEFAULT_PRECISION, sqrt_upper
from src.linalg.vectors import RatVector, Scalar, zeros
from src.lp.polyhedron import Polyhedron
from src.lp.solvers import chebyshev_inner_ball
from src.polynomial.calculus import gradient_polynomials
from src.polynomial.sparse import SparsePolynomial, evaluate

logger = logging.getLogger(__name__)


def lipschitz_bound(f: SparsePolynomial, R: Scalar, precision: int = DEFAULT_PRECISION) -> Fraction:
    """L >= max ||grad f|| on B_R(0), from term-wise bounds |x^beta| <= max(1, R)^|beta|."""
    if f.n == 0:
        return Fraction(0)
    Rb = max(Fraction(1), Fraction(R))
    per_coord = [
        sum((abs(c) * Rb ** sum(beta) for beta, c in g.terms.items()), Fraction(0))
        for g in gradient_polynomials(f)
    ]
    return sqrt_upper(f.n, precision) * max(per_coord)


def ball_volume_lower(rho: Scalar, n: int, precision: int = DEFAULT_PRECISION) -> Fraction:
    """Volume of the cube inscribed in the rho-ball: (2 rho / sqrt n)^n."""
    return (2 * Fraction(rho) / sqrt_upper(n, precision)) ** n


@dataclass(frozen=True)
class MinimizeResult:
    point: RatVector
    value: Fraction
    tau_low: Fraction
    tau_high: Fraction
    bisection_steps: int
    ellipsoid_iterations: int
    reduced_dim: int
    inner_radius: Fraction = Fraction(0)
    lipschitz: Fraction = Fraction(0)
    radius_reduced: Fraction = Fraction(0)
    # (tau, found a point) for every feasibility run, in order
    tau_history: Tuple[Tuple[Fraction, bool], ...] = field(default_factory=tuple)


def minimize_over_ball(
    f: SparsePolynomial,
    P: Polyhedron,
    R: Scalar,
    eps: Scalar,
    *,
    precision: int = DEFAULT_PRECISION,
    min_ellipsoid_precision: int = 64,
) -> MinimizeResult:
    """
    x in P with f(x) <= min over P n B_R of f + eps, for convex f.

    Works in the affine hull of P, then bisects the level tau: each step asks
    the ellipsoid method for a point of P' n B_R' n {f' <= tau}.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    hull = affine_hull(P)
    if hull.dimension == 0:
        x = hull.point
        v = evaluate(f, x)
        return MinimizeResult(x, v, v, v, 0, 0, 0)

    red = full_dim_reduce(f, P, hull)
    n1 = hull.dimension
    R1 = transfer_radius(R, hull, precision)
    L = lipschitz_bound(red.f, R1, precision)
    center, rho = chebyshev_inner_ball(red.P, R1, precision)

    if rho == 0 or L == 0:
        # flat intersection, or f constant on aff(P): any feasible point is optimal enough
        x = red.lift(center)
        v = evaluate(f, x)
        logger.info("minimize: trivial level set", extra={"ctx": {"rho": str(rho), "L": str(L)}})
        return MinimizeResult(x, v, v, v, 0, 0, n1, rho, L, R1)

    tau_hi = abs(evaluate(red.f, zeros(n1))) + L * R1
    tau_lo = -tau_hi
    ratio = min(Fraction(1), (eps / 2) / (L * 2 * R1))
    r = ball_volume_lower(rho, n1, precision) * ratio ** n1 / 2

    poly = oracle_polyhedron(red.P)
    ball = oracle_ball(R1)

    def run(tau: Fraction):
        oracle = IntersectionOracle(poly, ball, oracle_sublevel(red.f, tau))
        return ellipsoid_feasibility(oracle, R1, r, n1, min_precision=min_ellipsoid_precision)

    best: Optional[RatVector] = None
    history: List[Tuple[Fraction, bool]] = []
    iterations = 0
    steps = 0
    while tau_hi - tau_lo >= eps / 2:
        tau = (tau_hi + tau_lo) / 2
        res = run(tau)
        iterations += res.iterations
        steps += 1
        found = res.kind == "POINT"
        history.append((tau, found))
        if found:
            tau_hi, best = tau, res.point
        else:
            tau_lo = tau

    if best is None:
        res = run(tau_hi)
        iterations += res.iterations
        history.append((tau_hi, res.kind == "POINT"))
        if res.kind != "POINT":
            raise EllipsoidContractError(f"no point at the upper level {tau_hi}", module="ellipsoid")
        best = res.point

    x = red.lift(best)
    value = evaluate(f, x)
    logger.info(
        "minimize done",
        extra={"ctx": {"n": n1, "steps": steps, "iterations": iterations, "value": float(value)}},
    )
    return MinimizeResult(x, value, tau_lo, tau_hi, steps, iterations, n1, rho, L, R1, tuple(history))
