from __future__ import annotations

"""
Exact rational linear programming over P = {A x <= b}.
"""

from src.lp.polyhedron import Polyhedron, parse_polyhedron
from src.lp.solvers import LpOutcome, chebyshev_inner_ball, farkas_certificate, lp_feasible_point, lp_optimize

__all__ = [
    "LpOutcome",
    "Polyhedron",
    "chebyshev_inner_ball",
    "farkas_certificate",
    "lp_feasible_point",
    "lp_optimize",
    "parse_polyhedron",
]
