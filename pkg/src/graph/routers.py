from __future__ import annotations

from typing import Any, Dict

from langgraph.graph import END


def _routing(state: Dict[str, Any]) -> Dict[str, Any]:
    pipeline = state.get("pipeline") or {}
    return pipeline.get("routing") or {}


def route_after_feasibility(state: Dict[str, Any]) -> str:
    """Empty P stops the run; the caller raises EmptyPolyhedronError."""
    if (_routing(state).get("feasibility") or "").upper() == "EMPTY":
        return END
    return "structure"


def route_after_structure(state: Dict[str, Any]) -> str:
    if (_routing(state).get("structure") or "").upper() == "NOT_CONVEX_EVIDENCE":
        return END
    return "certify"


def route_after_certify(state: Dict[str, Any]) -> str:
    if (_routing(state).get("certify") or "").upper() == "UNBOUNDED":
        return END
    return "radius"
