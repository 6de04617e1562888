from __future__ import annotations

import itertools
import logging
import random
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Literal, Optional, Sequence, Tuple

from src.linalg.determinants import ldlt_definiteness
from src.polynomial.calculus import hessian_polynomials
from src.polynomial.sparse import SparsePolynomial

logger = logging.getLogger(__name__)

SearchMode = Literal["randomized", "exhaustive"]
_IntPoly = Tuple[Tuple[Tuple[int, ...], int], ...]


def grid_side(f: SparsePolynomial) -> int:
    """Points per axis of the grid {0, ..., n*deg(f)}."""
    return f.n * f.degree + 1


def grid_size(f: SparsePolynomial) -> int:
    return grid_side(f) ** f.n


def _integer_hessian(f: SparsePolynomial) -> List[List[_IntPoly]]:
    # positive scaling of f keeps definiteness, so clear all denominators once
    D = 1
    for c in f.terms.values():
        D = lcm(D, c.denominator)
    table = hessian_polynomials(f)
    return [
        [tuple((alpha, int(c * D)) for alpha, c in entry.terms.items()) for entry in row]
        for row in table
    ]


def _eval_int(poly: _IntPoly, powers: Sequence[Sequence[int]]) -> int:
    total = 0
    for alpha, c in poly:
        t = c
        for j, e in enumerate(alpha):
            if e:
                t *= powers[j][e]
        total += t
    return total


class _HessianEvaluator:
    """Positive-definiteness test of the Hessian at integer points, diagonal first."""

    def __init__(self, f: SparsePolynomial) -> None:
        self.n = f.n
        self.deg = max(f.degree, 2)
        self.table = _integer_hessian(f)
        self.nowhere_definite = any(not self.table[i][i] for i in range(self.n))

    def is_definite(self, point: Sequence[int]) -> bool:
        powers = []
        for x in point:
            pw = [1]
            for _ in range(self.deg):
                pw.append(pw[-1] * x)
            powers.append(pw)
        diag = []
        for i in range(self.n):
            v = _eval_int(self.table[i][i], powers)
            if v <= 0:
                return False
            diag.append(v)
        H = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            H[i][i] = diag[i]
            for j in range(i + 1, self.n):
                v = _eval_int(self.table[i][j], powers)
                H[i][j] = H[j][i] = v
        return ldlt_definiteness(H) == "POSITIVE_DEFINITE"


def hessian_nowhere_definite(f: SparsePolynomial) -> bool:
    """True when some diagonal Hessian entry is the zero polynomial, so no point can be definite."""
    return f.n > 0 and _HessianEvaluator(f).nowhere_definite


def default_tries(f: SparsePolynomial) -> int:
    return 64 * f.n


def _search(hessians: _HessianEvaluator, points: Iterable[Sequence[int]]) -> Tuple[Optional[Tuple[int, ...]], int]:
    tried = 0
    for p in points:
        tried += 1
        if hessians.is_definite(p):
            return tuple(p), tried
    return None, tried


def find_definite_point(
    f: SparsePolynomial,
    mode: SearchMode = "exhaustive",
    *,
    seed: int = 0,
    max_tries: Optional[int] = None,
) -> Optional[Tuple[Fraction, ...]]:
    """
    Integer grid point a in {0..n*deg f}^n where the Hessian of f is positive definite.

    Exhaustive walks the grid in lexicographic order and returns None only when
    no grid point works. Randomized draws `max_tries` (default 64*n) uniform
    grid points from a seeded generator.
    """
    if f.n == 0:
        return ()
    hessians = _HessianEvaluator(f)
    if hessians.nowhere_definite:
        # an identically zero diagonal entry rules out every point
        logger.info("definite point search: zero diagonal in Hessian", extra={"ctx": {"n": f.n}})
        return None

    side = grid_side(f)
    if mode == "exhaustive":
        points = itertools.product(range(side), repeat=f.n)
    else:
        rng = random.Random(seed)
        tries = max_tries if max_tries is not None else default_tries(f)
        points = ([rng.randrange(side) for _ in range(f.n)] for _ in range(tries))

    found, tried = _search(hessians, points)
    logger.info(
        "definite point search",
        extra={"ctx": {"mode": mode, "tried": tried, "found": found is not None, "side": side}},
    )
    if found is None:
        return None
    return tuple(Fraction(v) for v in found)
