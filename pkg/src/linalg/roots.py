from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Sequence, Tuple

from src.app.errors import NegativeInputError
from src.linalg.vectors import Scalar, norm_sq

DEFAULT_PRECISION = 32


def sqrt_bounds(s: Scalar, p: int = DEFAULT_PRECISION) -> Tuple[Fraction, Fraction]:
    """
    Rational (lower, upper) around sqrt(s) with gap at most 2**-p.

    Exact squares give lower == upper.
    """
    s = Fraction(s)
    if s < 0:
        raise NegativeInputError(f"sqrt of negative rational {s}")
    if s == 0:
        return Fraction(0), Fraction(0)
    num, den = s.numerator, s.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        r = Fraction(rn, rd)
        return r, r
    scaled = (num << (2 * p)) // den
    lo = isqrt(scaled)
    return Fraction(lo, 1 << p), Fraction(lo + 1, 1 << p)


def sqrt_upper(s: Scalar, p: int = DEFAULT_PRECISION) -> Fraction:
    return sqrt_bounds(s, p)[1]


def norm_upper(v: Sequence[Scalar], p: int = DEFAULT_PRECISION) -> Fraction:
    return sqrt_bounds(norm_sq(v), p)[1]


def inv_norm_upper(v: Sequence[Scalar], p: int = DEFAULT_PRECISION) -> Fraction:
    """Upper bound on 1/||v|| for v != 0, refining precision until the lower root is positive."""
    s = norm_sq(v)
    if s == 0:
        raise ZeroDivisionError("inverse norm of the zero vector")
    lo, _ = sqrt_bounds(s, p)
    while lo == 0:
        p *= 2
        lo, _ = sqrt_bounds(s, p)
    return 1 / lo
