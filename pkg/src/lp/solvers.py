from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from src.app.errors import DimensionMismatchError, InnerBallInfeasibleError
from src.linalg.roots import DEFAULT_PRECISION, norm_upper, sqrt_upper
from src.linalg.vectors import RatVector, Scalar, as_vector, zeros
from src.lp.polyhedron import Polyhedron
from src.lp.simplex import BasisLogEntry, LpStatus, solve_standard_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    point: Optional[RatVector] = None
    certificate: Optional[RatVector] = None
    value: Optional[Fraction] = None
    dual: Optional[RatVector] = None
    basis_log: Tuple[BasisLogEntry, ...] = field(default_factory=tuple)


def _split_form(P: Polyhedron):
    """[A, -A, I] z = b with z = (x+, x-, s)."""
    n, m = P.n, P.m
    rows = []
    for i, a in enumerate(P.A):
        rows.append(list(a) + [-v for v in a] + [Fraction(int(k == i)) for k in range(m)])
    return rows, list(P.b), 2 * n + m


def _recover_x(z: Sequence[Fraction], n: int) -> RatVector:
    return tuple(z[j] - z[n + j] for j in range(n))


def lp_feasible_point(P: Polyhedron) -> LpOutcome:
    """A basic feasible point of P, or INFEASIBLE with a Farkas certificate."""
    if P.m == 0:
        return LpOutcome("OPTIMAL", point=zeros(P.n), value=Fraction(0))
    rows, rhs, n_vars = _split_form(P)
    res = solve_standard_form(rows, rhs, None, n_vars=n_vars)
    if res.status == "INFEASIBLE":
        return LpOutcome("INFEASIBLE", certificate=farkas_certificate(P.A, P.b), basis_log=res.basis_log)
    return LpOutcome("OPTIMAL", point=_recover_x(res.z, P.n), value=Fraction(0), basis_log=res.basis_log)


def lp_optimize(c: Sequence[Scalar], P: Polyhedron) -> LpOutcome:
    """
    Exact min c.x over P.

    For OPTIMAL outcomes `dual` is y >= 0 with A^T y = -c and -b.y equal to
    the optimum (when no constraint row turned out redundant).
    """
    if len(c) != P.n:
        raise DimensionMismatchError(f"cost has length {len(c)}, expected {P.n}")
    c = as_vector(c)
    rows, rhs, n_vars = _split_form(P)
    cost = list(c) + [-v for v in c] + [Fraction(0)] * P.m
    res = solve_standard_form(rows, rhs, cost, n_vars=n_vars)
    if res.status == "INFEASIBLE":
        return LpOutcome("INFEASIBLE", certificate=farkas_certificate(P.A, P.b), basis_log=res.basis_log)
    if res.status == "UNBOUNDED":
        return LpOutcome("UNBOUNDED", basis_log=res.basis_log)
    dual = tuple(-y for y in res.duals) if res.duals is not None else None
    return LpOutcome(
        "OPTIMAL",
        point=_recover_x(res.z, P.n),
        value=res.value,
        dual=dual,
        basis_log=res.basis_log,
    )


def farkas_certificate(C: Sequence[Sequence[Scalar]], d: Sequence[Scalar]) -> Optional[RatVector]:
    """y >= 0 with C^T y = 0 and d.y = -1 when {C x <= d} is empty, else None."""
    m = len(C)
    if m == 0:
        return None
    n = len(C[0])
    rows = [[Fraction(C[i][j]) for i in range(m)] for j in range(n)]
    rows.append([Fraction(v) for v in d])
    rhs = [Fraction(0)] * n + [Fraction(-1)]
    res = solve_standard_form(rows, rhs, None, n_vars=m)
    if res.status != "OPTIMAL":
        return None
    return res.z


def chebyshev_inner_ball(P: Polyhedron, R: Scalar, precision: int = DEFAULT_PRECISION) -> Tuple[RatVector, Fraction]:
    """
    Largest (center, rho) with the rho-ball inside P and inside B_R(0).

    Row norms enter as rational upper bounds; the ball constraint is the box
    ||x||_inf + rho <= R / ub(sqrt n), which keeps the ball inside B_R.
    """
    n = P.n
    R = Fraction(R)
    box = R / sqrt_upper(n, precision)
    rows, rhs = [], []
    for a, bi in zip(P.A, P.b):
        rows.append(tuple(a) + (norm_upper(a, precision),))
        rhs.append(bi)
    for j in range(n):
        e = [Fraction(int(k == j)) for k in range(n)]
        rows.append(tuple(e) + (Fraction(1),))
        rhs.append(box)
        rows.append(tuple(-v for v in e) + (Fraction(1),))
        rhs.append(box)
    rows.append(tuple([Fraction(0)] * n) + (Fraction(-1),))
    rhs.append(Fraction(0))

    lifted = Polyhedron.from_rows(rows, rhs, n + 1)
    out = lp_optimize(tuple([Fraction(0)] * n) + (Fraction(-1),), lifted)
    if out.status != "OPTIMAL":
        raise InnerBallInfeasibleError(f"P intersected with B_{R} is empty (inner-ball LP {out.status})")
    center, rho = out.point[:n], out.point[n]
    logger.debug("inner ball", extra={"ctx": {"n": n, "rho": str(rho)}})
    return center, rho
