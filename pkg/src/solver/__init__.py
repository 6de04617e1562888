from __future__ import annotations

"""
Solve facade, sampled convexity check and the document runner shared by the
CLI and the HTTP surface.
"""

from src.graph.state import SolveOptions
from src.solver.convexity import ConvexityReport, sampled_convexity_check
from src.solver.solve import SolveOutcome, solve

__all__ = [
    "ConvexityReport",
    "SolveOptions",
    "SolveOutcome",
    "sampled_convexity_check",
    "solve",
]
