from __future__ import annotations

"""
Bit-model ellipsoid method: separation oracles, feasibility, affine-hull
reduction and the level bisection minimizer.
"""

from src.ellipsoid.method import EllipsoidState, FeasibilityResult, ellipsoid_feasibility
from src.ellipsoid.minimize import MinimizeResult, lipschitz_bound, minimize_over_ball
from src.ellipsoid.oracles import (
    Cut,
    IntersectionOracle,
    OracleAnswer,
    SeparationOracle,
    oracle_ball,
    oracle_polyhedron,
    oracle_sublevel,
)
from src.ellipsoid.reduction import AffineHull, ReducedProblem, affine_hull, full_dim_reduce

__all__ = [
    "AffineHull",
    "Cut",
    "EllipsoidState",
    "FeasibilityResult",
    "IntersectionOracle",
    "MinimizeResult",
    "OracleAnswer",
    "ReducedProblem",
    "SeparationOracle",
    "affine_hull",
    "ellipsoid_feasibility",
    "full_dim_reduce",
    "lipschitz_bound",
    "minimize_over_ball",
    "oracle_ball",
    "oracle_polyhedron",
    "oracle_sublevel",
]
