from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from src.app.errors import DefinitePointNotFoundError, NotConvexEvidence
from src.polynomial.sparse import SparsePolynomial
from src.structure.decomposition import StructureDecomposition, decompose
from src.structure.definite_point import (
    SearchMode,
    default_tries,
    find_definite_point,
    grid_size,
    hessian_nowhere_definite,
)
from src.structure.lower_bound import QuadraticLowerBound, lower_bound_at

logger = logging.getLogger(__name__)

DEFAULT_GRID_LIMIT = 1 << 20


@dataclass(frozen=True)
class StructureResult:
    decomposition: StructureDecomposition
    bound: Optional[QuadraticLowerBound]
    search_mode: Optional[SearchMode] = None

    @property
    def linear_only(self) -> bool:
        return self.bound is None


def structure_with_bound(
    f: SparsePolynomial,
    mode: SearchMode = "randomized",
    *,
    seed: int = 0,
    max_tries: Optional[int] = None,
    grid_limit: int = DEFAULT_GRID_LIMIT,
) -> StructureResult:
    """
    Decompose f and attach a strongly convex quadratic under-estimator of fhat.

    Randomized search switches to exhaustive when the grid has at most
    `grid_limit` points. An exhausted grid, or a Hessian diagonal entry that is
    identically zero, raises NotConvexEvidence in either mode.
    """
    dec = decompose(f)
    if dec.linear_only:
        logger.info("structure: linear only", extra={"ctx": {"n": f.n}})
        return StructureResult(dec, None)

    size = grid_size(dec.fhat)
    if hessian_nowhere_definite(dec.fhat):
        raise NotConvexEvidence(
            f"Hessian of fhat has an identically zero diagonal entry; no point of the {size}-point grid is definite",
            grid_points=size,
        )
    effective: SearchMode = "exhaustive" if mode == "exhaustive" or size <= grid_limit else "randomized"
    a = find_definite_point(dec.fhat, effective, seed=seed, max_tries=max_tries)
    if a is None:
        if effective == "exhaustive":
            raise NotConvexEvidence(
                f"Hessian of fhat is nowhere positive definite on the {size}-point grid", grid_points=size
            )
        tries = max_tries if max_tries is not None else default_tries(dec.fhat)
        raise DefinitePointNotFoundError(
            f"no positive definite Hessian in {tries} random grid samples (seed {seed})"
        )
    bound = lower_bound_at(dec.fhat, a)
    logger.info(
        "structure: lower bound",
        extra={"ctx": {"k": dec.k, "mode": effective, "a": [str(v) for v in a], "mu": str(bound.mu)}},
    )
    return StructureResult(dec, bound, effective)
