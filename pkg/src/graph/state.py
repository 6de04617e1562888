from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from src.app.settings import Settings
from src.linalg.roots import DEFAULT_PRECISION
from src.lp.polyhedron import Polyhedron
from src.polynomial.sparse import SparsePolynomial
from src.structure.definite_point import SearchMode
from src.structure.pipeline import DEFAULT_GRID_LIMIT

GRAPH_VERSION = "v1"


@dataclass(frozen=True)
class SolveOptions:
    """
    Effective knobs for one solve. CLI flags and HTTP fields override the
    values taken from Settings.
    """
    seed: int = 0
    mode: SearchMode = "randomized"
    max_tries: Optional[int] = None
    sqrt_precision: int = DEFAULT_PRECISION
    grid_limit: int = DEFAULT_GRID_LIMIT
    ellipsoid_min_precision: int = 64
    decrease_steps: Tuple[int, ...] = (1, 100, 10000)

    def __post_init__(self) -> None:
        if self.mode not in ("randomized", "exhaustive"):
            raise ValueError(f"mode must be randomized or exhaustive, got {self.mode!r}")

    @classmethod
    def from_settings(cls, s: Settings, **overrides: Any) -> "SolveOptions":
        base = dict(
            seed=s.seed,
            mode=s.mode,
            sqrt_precision=s.sqrt_precision,
            grid_limit=s.exhaustive_grid_limit,
            ellipsoid_min_precision=s.ellipsoid_min_precision,
        )
        base.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**base)


def initial_state(f: SparsePolynomial, P: Polyhedron, eps: Fraction, options: SolveOptions) -> Dict[str, Any]:
    """Graph state: inputs, per-stage outputs and pipeline bookkeeping."""
    return {
        "input": {"f": f, "P": P, "eps": Fraction(eps)},
        "options": options,
        "outputs": {},
        "pipeline": {
            "graph_version": GRAPH_VERSION,
            "stages_run": [],
            "timings_ms": {},
            "routing": {},
        },
    }
