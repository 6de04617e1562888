from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.app.errors import DimensionMismatchError
from src.core.rationals import bit_length

Scalar = Union[Fraction, int]
RatVector = Tuple[Fraction, ...]
RatMatrix = Tuple[RatVector, ...]


def as_vector(values: Iterable[Scalar]) -> RatVector:
    return tuple(Fraction(v) for v in values)


def as_matrix(rows: Iterable[Iterable[Scalar]]) -> RatMatrix:
    m = tuple(as_vector(r) for r in rows)
    if len({len(r) for r in m}) > 1:
        raise DimensionMismatchError("ragged matrix")
    return m


def zeros(n: int) -> RatVector:
    return (Fraction(0),) * n


def identity(n: int) -> RatMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _check_same(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths differ: {len(u)} vs {len(v)}")


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Fraction:
    _check_same(u, v)
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def norm_sq(v: Sequence[Scalar]) -> Fraction:
    return sum((Fraction(a) * a for a in v), Fraction(0))


def add(u: Sequence[Scalar], v: Sequence[Scalar]) -> RatVector:
    _check_same(u, v)
    return tuple(Fraction(a) + b for a, b in zip(u, v))


def sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> RatVector:
    _check_same(u, v)
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def scale(c: Scalar, v: Sequence[Scalar]) -> RatVector:
    return tuple(Fraction(c) * a for a in v)


def is_zero_vector(v: Sequence[Scalar]) -> bool:
    return all(a == 0 for a in v)


def n_cols(M: Sequence[Sequence[Scalar]], default: int = 0) -> int:
    return len(M[0]) if M else default


def transpose(M: Sequence[Sequence[Scalar]], n: Optional[int] = None) -> RatMatrix:
    """n gives the column count when M has no rows."""
    cols = n_cols(M, n or 0)
    return tuple(tuple(Fraction(M[i][j]) for i in range(len(M))) for j in range(cols))


def mat_vec(M: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> RatVector:
    return tuple(dot(row, v) for row in M)


def mat_mul(A: Sequence[Sequence[Scalar]], B: Sequence[Sequence[Scalar]]) -> RatMatrix:
    if A and len(A[0]) != len(B):
        raise DimensionMismatchError(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{n_cols(B)}")
    Bt = transpose(B)
    return tuple(tuple(dot(r, c) for c in Bt) for r in A)


def combine(coeffs: Sequence[Scalar], vectors: Sequence[Sequence[Scalar]], n: int) -> RatVector:
    """sum_i coeffs[i] * vectors[i] in R^n."""
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j in range(n):
                out[j] += c * v[j]
    return tuple(out)


def is_symmetric(M: Sequence[Sequence[Scalar]]) -> bool:
    n = len(M)
    return all(len(r) == n for r in M) and all(M[i][j] == M[j][i] for i in range(n) for j in range(i))


def denominator_lcm(v: Iterable[Scalar]) -> int:
    d = 1
    for a in v:
        d = lcm(d, Fraction(a).denominator)
    return d


def clear_denominators(v: Sequence[Scalar]) -> Tuple[int, Tuple[int, ...]]:
    """(d, d*v) with d the smallest positive integer making d*v integral."""
    d = denominator_lcm(v)
    return d, tuple(int(Fraction(a) * d) for a in v)


def matrix_bit_length(M: Sequence[Sequence[Scalar]]) -> int:
    return sum(bit_length(Fraction(a)) for row in M for a in row)


def solve_linear_system(M: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> Optional[RatVector]:
    """A particular solution of M x = rhs by exact elimination, or None if inconsistent."""
    m = len(M)
    if len(rhs) != m:
        raise DimensionMismatchError(f"matrix has {m} rows, rhs has {len(rhs)}")
    n = n_cols(M)
    rows: List[List[Fraction]] = [[Fraction(a) for a in M[i]] + [Fraction(rhs[i])] for i in range(m)]
    pivots: List[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if any(rows[i][n] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return tuple(x)


def rank(M: Sequence[Sequence[Scalar]]) -> int:
    rows = [[Fraction(a) for a in r] for r in M]
    n = n_cols(rows)
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r
