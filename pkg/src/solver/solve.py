from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Literal, Optional

from src.app.errors import ContractViolation, DimensionMismatchError, EmptyPolyhedronError
from src.bounds.radius import RadiusBound
from src.ellipsoid.minimize import MinimizeResult
from src.graph.build_graph import compiled_graph
from src.graph.state import SolveOptions, initial_state
from src.linalg.vectors import RatVector, Scalar
from src.lp.polyhedron import Polyhedron
from src.polynomial.sparse import SparsePolynomial, evaluate
from src.structure.pipeline import StructureResult

logger = logging.getLogger(__name__)

OutcomeStatus = Literal["SOLVED", "UNBOUNDED", "NOT_CONVEX_EVIDENCE"]


@dataclass(frozen=True)
class SolveOutcome:
    """
    SOLVED: `point` lies in P exactly and `value` = f(point).
    UNBOUNDED: `ray` has A ray <= 0, U ray = 0, <w, ray> = 1.
    NOT_CONVEX_EVIDENCE: the Hessian of fhat is singular on the whole search grid.
    """

    status: OutcomeStatus
    feasible_point: RatVector
    point: Optional[RatVector] = None
    value: Optional[Fraction] = None
    ray: Optional[RatVector] = None
    radius: Optional[RadiusBound] = None
    structure: Optional[StructureResult] = None
    minimize: Optional[MinimizeResult] = None
    message: Optional[str] = None
    grid_points: int = 0


def check_solution(f: SparsePolynomial, P: Polyhedron, point: RatVector, value: Fraction) -> None:
    """Guarantees of a SOLVED outcome: point in P exactly and value = f(point)."""
    violated = P.first_violated_row(point)
    if violated is not None:
        raise ContractViolation(f"solution violates constraint row {violated}", module="solver-cli")
    if value != evaluate(f, point):
        raise ContractViolation(f"reported value {value} differs from f(point)", module="solver-cli")


def run_pipeline(f: SparsePolynomial, P: Polyhedron, eps: Scalar, options: SolveOptions) -> Dict[str, Any]:
    """Final graph state for one solve."""
    return compiled_graph().invoke(initial_state(f, P, Fraction(eps), options))


def solve(
    f: SparsePolynomial,
    P: Polyhedron,
    eps: Scalar,
    options: Optional[SolveOptions] = None,
) -> SolveOutcome:
    """
    Decide whether f is unbounded below on P; if not, return x in P with
    f(x) <= min f + eps. f must be convex; broken promises surface as
    NOT_CONVEX_EVIDENCE when the structure search can prove it.
    """
    options = options or SolveOptions()
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if f.n != P.n:
        raise DimensionMismatchError(f"polynomial has {f.n} variables, constraints have {P.n}")

    state = run_pipeline(f, P, eps, options)
    out = state["outputs"]
    logger.info(
        "solve pipeline",
        extra={"ctx": {"stages": state["pipeline"]["stages_run"], "routing": state["pipeline"]["routing"]}},
    )

    feas = out["feasibility"]
    if feas["status"] == "EMPTY":
        raise EmptyPolyhedronError("constraints are infeasible", certificate=feas["certificate"])
    a = feas["point"]

    st = out["structure"]
    if st["status"] == "NOT_CONVEX_EVIDENCE":
        return SolveOutcome("NOT_CONVEX_EVIDENCE", a, message=st["message"], grid_points=st["grid_points"])
    structure: StructureResult = st["result"]

    if out["certify"]["status"] == "UNBOUNDED":
        return SolveOutcome("UNBOUNDED", a, ray=out["certify"]["certificate"].ray, structure=structure)

    res: MinimizeResult = out["minimize"]
    check_solution(f, P, res.point, res.value)
    return SolveOutcome(
        "SOLVED",
        a,
        point=res.point,
        value=res.value,
        radius=out["radius"],
        structure=structure,
        minimize=res,
    )
