from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from src.linalg.determinants import ldlt_definiteness
from src.linalg.vectors import RatVector
from src.polynomial.calculus import hessian_at
from src.polynomial.sparse import SparsePolynomial

logger = logging.getLogger(__name__)

ConvexityStatus = Literal["NO_VIOLATION", "VIOLATION"]

# sample coordinates: k/d with |k| <= 40, 1 <= d <= 4
_NUM_RANGE = 40
_DEN_RANGE = 4


@dataclass(frozen=True)
class ConvexityReport:
    status: ConvexityStatus
    trials: int
    seed: int
    point: Optional[RatVector] = None


def sampled_convexity_check(f: SparsePolynomial, trials: int, seed: int = 0) -> ConvexityReport:
    """
    Look for a rational point with an indefinite Hessian.

    A VIOLATION proves f is not convex. NO_VIOLATION proves nothing.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if f.degree <= 1:
        return ConvexityReport("NO_VIOLATION", trials, seed)
    rng = random.Random(seed)
    for t in range(trials):
        x = tuple(Fraction(rng.randint(-_NUM_RANGE, _NUM_RANGE), rng.randint(1, _DEN_RANGE)) for _ in range(f.n))
        if ldlt_definiteness(hessian_at(f, x)) == "INDEFINITE":
            logger.info("convexity violation", extra={"ctx": {"trial": t, "point": [str(v) for v in x]}})
            return ConvexityReport("VIOLATION", trials, seed, x)
    return ConvexityReport("NO_VIOLATION", trials, seed)
