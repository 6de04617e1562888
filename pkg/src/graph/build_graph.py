from __future__ import annotations

from functools import lru_cache

from langgraph.graph import END, START, StateGraph

from src.graph.nodes import certify_node, ellipsoid_node, feasibility_node, radius_node, structure_node
from src.graph.routers import route_after_certify, route_after_feasibility, route_after_structure


def build_graph() -> "StateGraph":
    """
    Solve pipeline:
    - START -> feasibility
    - feasibility -> (END if P is empty, else structure)
    - structure -> (END on not-convex evidence, else certify)
    - certify -> (END with a ray if unbounded, else radius)
    - radius -> ellipsoid -> END
    """
    g = StateGraph(dict)

    g.add_node("feasibility", feasibility_node)
    g.add_node("structure", structure_node)
    g.add_node("certify", certify_node)
    g.add_node("radius", radius_node)
    g.add_node("ellipsoid", ellipsoid_node)

    g.add_edge(START, "feasibility")
    g.add_conditional_edges("feasibility", route_after_feasibility, {"structure": "structure", END: END})
    g.add_conditional_edges("structure", route_after_structure, {"certify": "certify", END: END})
    g.add_conditional_edges("certify", route_after_certify, {"radius": "radius", END: END})
    g.add_edge("radius", "ellipsoid")
    g.add_edge("ellipsoid", END)

    return g


@lru_cache(maxsize=1)
def compiled_graph():
    return build_graph().compile()
