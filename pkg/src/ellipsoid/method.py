from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Literal, Optional, Sequence, Tuple

from src.app.errors import EllipsoidContractError
from src.core.rationals import log2_ceil
from src.ellipsoid.oracles import SeparationOracle
from src.linalg.roots import sqrt_bounds
from src.linalg.vectors import RatVector, Scalar, dot, mat_vec, zeros

logger = logging.getLogger(__name__)

FeasibilityKind = Literal["POINT", "SMALL_VOLUME"]
Shape = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class EllipsoidState:
    """{x : (x - center)^T shape^-1 (x - center) <= 1} with dyadic entries."""

    center: RatVector
    shape: Shape
    precision: int
    iteration: int


@dataclass(frozen=True)
class FeasibilityResult:
    kind: FeasibilityKind
    point: Optional[RatVector]
    iterations: int


def round_dyadic(x: Fraction, p: int) -> Fraction:
    """Nearest rational m / 2^e with about p significant bits."""
    if x == 0:
        return x
    num, den = x.numerator, x.denominator
    shift = p - (abs(num).bit_length() - den.bit_length())
    if shift >= 0:
        m = ((num << (shift + 1)) + den) // (2 * den)
        return Fraction(m, 1 << shift)
    q = den << (-shift)
    m = (2 * num + q) // (2 * q)
    return Fraction(m << (-shift))


def _ln(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


def precision_bits(n: int, R: Scalar, r: Scalar, minimum: int = 64) -> int:
    """max(minimum, 16 n^2, 2 log2(condition bound) + 32) mantissa bits."""
    R, r = Fraction(R), Fraction(r)
    cond_bits = n * max(log2_ceil(2 * R), 1) + max(log2_ceil(1 / r), 1)
    return max(minimum, 16 * n * n, 2 * cond_bits + 32)


def iteration_budget(n: int, R: Scalar, r: Scalar) -> int:
    R, r = Fraction(R), Fraction(r)
    raw = 10 * n * (n + 1) * (n * _ln(2 * R) + _ln(1 / r) + 1)
    return max(1, math.ceil(raw))


def log_volume_step(n: int) -> float:
    """Upper bound on ln(vol ratio) of one inflated central-cut step (negative)."""
    inflate = 0.5 * n * math.log1p(1.0 / (8 * n * n))
    if n == 1:
        return math.log(0.5) + inflate + 1e-12
    cut = math.log(n / (n + 1)) + 0.5 * (n - 1) * math.log(n * n / (n * n - 1))
    return cut + inflate + 1e-12


def _sqrt_rel(s: Fraction, p: int) -> Fraction:
    # absolute precision fine enough for p relative bits
    extra = max(0, (s.denominator.bit_length() - s.numerator.bit_length()) // 2 + 2)
    return sqrt_bounds(s, p + extra)[1]


def central_cut(center: RatVector, shape: Shape, g: Sequence[Fraction], p: int) -> Tuple[RatVector, Shape]:
    """Rounded central-cut update keeping {x : <g, x - center> <= 0}, shape inflated by 1 + 1/(8n^2)."""
    n = len(center)
    inflate = 1 + Fraction(1, 8 * n * n)
    if n == 1:
        e = shape[0][0]
        step = _sqrt_rel(e, p) / 2
        c = center[0] - step if g[0] > 0 else center[0] + step
        return (round_dyadic(c, p),), ((round_dyadic(e / 4 * inflate, p),),)

    Eg = mat_vec(shape, g)
    gEg = dot(g, Eg)
    if gEg <= 0:
        raise EllipsoidContractError("shape matrix lost positive definiteness", module="ellipsoid")
    s = _sqrt_rel(gEg, p)
    b = [v / s for v in Eg]
    new_center = tuple(round_dyadic(c - bi / (n + 1), p) for c, bi in zip(center, b))
    factor = Fraction(n * n, n * n - 1) * inflate
    k = Fraction(2, n + 1)
    rows: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = round_dyadic(factor * (shape[i][j] - k * b[i] * b[j]), p)
            rows[i][j] = v
            rows[j][i] = v
    return new_center, tuple(tuple(r) for r in rows)


def ellipsoid_feasibility(
    oracle: SeparationOracle,
    R: Scalar,
    r: Scalar,
    n: int,
    *,
    precision: Optional[int] = None,
    min_precision: int = 64,
    max_iterations: Optional[int] = None,
    on_step: Optional[Callable[[EllipsoidState], None]] = None,
) -> FeasibilityResult:
    """
    Central-cut ellipsoid search for a point of K, starting from B_R(0).

    Returns POINT as soon as the center is inside K. Returns SMALL_VOLUME when
    the iteration budget is spent or the tracked volume bound drops to r;
    when vol(K) > r the point is found first.
    """
    R, r = Fraction(R), Fraction(r)
    if R <= 0 or r <= 0:
        raise ValueError("R and r must be positive")
    p = precision or precision_bits(n, R, r, min_precision)
    budget = max_iterations or iteration_budget(n, R, r)

    center = zeros(n)
    shape: Shape = tuple(tuple(R * R if i == j else Fraction(0) for j in range(n)) for i in range(n))
    ln_vol = n * _ln(2 * R)
    ln_r = _ln(r)
    step = log_volume_step(n)

    for it in range(budget + 1):
        if on_step is not None:
            on_step(EllipsoidState(center, shape, p, it))
        ans = oracle.query(center)
        if ans.kind == "INSIDE":
            logger.debug("ellipsoid point", extra={"ctx": {"iterations": it, "n": n}})
            return FeasibilityResult("POINT", center, it)
        if ans.kind == "INFEASIBLE_EVERYWHERE":
            return FeasibilityResult("SMALL_VOLUME", None, it)
        if it == budget or ln_vol <= ln_r:
            logger.debug("ellipsoid small volume", extra={"ctx": {"iterations": it, "n": n}})
            return FeasibilityResult("SMALL_VOLUME", None, it)
        center, shape = central_cut(center, shape, ans.cut.normal, p)
        ln_vol += step
    return FeasibilityResult("SMALL_VOLUME", None, budget)
