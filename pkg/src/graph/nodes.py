from __future__ import annotations

import logging
import time
from typing import Any, Dict

from src.app.errors import NotConvexEvidence
from src.bounds.certificates import check_linear_decrease, unboundedness_ray
from src.bounds.radius import radius_R
from src.ellipsoid.minimize import minimize_over_ball
from src.lp.solvers import lp_feasible_point
from src.structure.pipeline import structure_with_bound

logger = logging.getLogger(__name__)


def _now_ms() -> int:
    return int(time.time() * 1000)


def _enter(state: Dict[str, Any], stage: str) -> int:
    state["pipeline"]["stages_run"].append(stage)
    return _now_ms()


def _leave(state: Dict[str, Any], stage: str, t0: int) -> Dict[str, Any]:
    state["pipeline"]["timings_ms"][stage] = _now_ms() - t0
    return state


def feasibility_node(state: Dict[str, Any]) -> Dict[str, Any]:
    t0 = _enter(state, "feasibility")
    P = state["input"]["P"]
    out = lp_feasible_point(P)
    if out.status == "OPTIMAL":
        state["outputs"]["feasibility"] = {"status": "FEASIBLE", "point": out.point}
        state["pipeline"]["routing"]["feasibility"] = "FEASIBLE"
    else:
        state["outputs"]["feasibility"] = {"status": "EMPTY", "certificate": out.certificate}
        state["pipeline"]["routing"]["feasibility"] = "EMPTY"
        logger.info("empty polyhedron", extra={"ctx": {"m": P.m, "n": P.n}})
    return _leave(state, "feasibility", t0)


def structure_node(state: Dict[str, Any]) -> Dict[str, Any]:
    t0 = _enter(state, "structure")
    opts = state["options"]
    try:
        res = structure_with_bound(
            state["input"]["f"],
            opts.mode,
            seed=opts.seed,
            max_tries=opts.max_tries,
            grid_limit=opts.grid_limit,
        )
    except NotConvexEvidence as e:
        state["outputs"]["structure"] = {"status": "NOT_CONVEX_EVIDENCE", "message": str(e), "grid_points": e.grid_points}
        state["pipeline"]["routing"]["structure"] = "NOT_CONVEX_EVIDENCE"
        logger.warning("not convex evidence", extra={"ctx": {"grid_points": e.grid_points}})
        return _leave(state, "structure", t0)
    state["outputs"]["structure"] = {"status": "OK", "result": res}
    state["pipeline"]["routing"]["structure"] = "OK"
    return _leave(state, "structure", t0)


def certify_node(state: Dict[str, Any]) -> Dict[str, Any]:
    t0 = _enter(state, "certify")
    f, P = state["input"]["f"], state["input"]["P"]
    dec = state["outputs"]["structure"]["result"].decomposition
    cert = unboundedness_ray(P, dec.U, dec.w)
    if cert is None:
        state["outputs"]["certify"] = {"status": "BOUNDED"}
        state["pipeline"]["routing"]["certify"] = "BOUNDED"
        return _leave(state, "certify", t0)
    a = state["outputs"]["feasibility"]["point"]
    check_linear_decrease(f, a, cert.ray, state["options"].decrease_steps)
    state["outputs"]["certify"] = {"status": "UNBOUNDED", "certificate": cert}
    state["pipeline"]["routing"]["certify"] = "UNBOUNDED"
    return _leave(state, "certify", t0)


def radius_node(state: Dict[str, Any]) -> Dict[str, Any]:
    t0 = _enter(state, "radius")
    f, P = state["input"]["f"], state["input"]["P"]
    state["outputs"]["radius"] = radius_R(
        f,
        P,
        state["outputs"]["structure"]["result"],
        a_feas=state["outputs"]["feasibility"]["point"],
        precision=state["options"].sqrt_precision,
    )
    return _leave(state, "radius", t0)


def ellipsoid_node(state: Dict[str, Any]) -> Dict[str, Any]:
    t0 = _enter(state, "ellipsoid")
    inp, opts = state["input"], state["options"]
    state["outputs"]["minimize"] = minimize_over_ball(
        inp["f"],
        inp["P"],
        state["outputs"]["radius"].R,
        inp["eps"],
        precision=opts.sqrt_precision,
        min_ellipsoid_precision=opts.ellipsoid_min_precision,
    )
    return _leave(state, "ellipsoid", t0)
