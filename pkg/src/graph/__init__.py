from __future__ import annotations

"""
LangGraph solve pipeline: state, stage nodes, routers and topology.
"""

from src.graph import build_graph, nodes, routers, state

__all__ = [
    "build_graph",
    "nodes",
    "routers",
    "state",
]
