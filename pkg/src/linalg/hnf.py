from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.app.errors import NonIntegerMatrixError

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class HnfResult:
    """
    A @ [U_part | K_part] = [H | 0] with [U_part | K_part] unimodular.

    Matrices are row-major integer tuples. U_part is N x R, K_part is N x (N - R),
    H is M x R and lower triangular along `pivots` (row index per column).
    """

    U_part: IntMatrix
    K_part: IntMatrix
    H: IntMatrix
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def kernel_columns(self) -> List[Tuple[int, ...]]:
        n_k = len(self.K_part[0]) if self.K_part else 0
        return [tuple(row[j] for row in self.K_part) for j in range(n_k)]

    def image_columns(self) -> List[Tuple[int, ...]]:
        return [tuple(row[j] for row in self.U_part) for j in range(self.rank)]


def _exgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _as_int(x) -> int:
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    f = Fraction(x)
    if f.denominator != 1:
        raise NonIntegerMatrixError(f"non-integer entry {f}")
    return f.numerator


def hnf_decompose(A: Sequence[Sequence], n: int | None = None) -> HnfResult:
    """
    Column-style Hermite normal form by unimodular column operations.

    `n` fixes the column count when A has no rows.
    """
    m = len(A)
    cols = len(A[0]) if m else (n or 0)
    W: List[List[int]] = [[_as_int(a) for a in row] for row in A]
    V: List[List[int]] = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def col_op(k: int, j: int, s: int, t: int, u: int, v: int) -> None:
        # (col_k, col_j) <- (s*col_k + t*col_j, u*col_k + v*col_j)
        for M in (W, V):
            for row in M:
                ck, cj = row[k], row[j]
                row[k] = s * ck + t * cj
                row[j] = u * ck + v * cj

    pivots: List[int] = []
    k = 0
    for i in range(m):
        if k == cols:
            break
        if all(W[i][j] == 0 for j in range(k, cols)):
            continue
        for j in range(k + 1, cols):
            b = W[i][j]
            if b == 0:
                continue
            a = W[i][k]
            g, s, t = _exgcd(a, b)
            col_op(k, j, s, t, -b // g, a // g)
        if W[i][k] < 0:
            for M in (W, V):
                for row in M:
                    row[k] = -row[k]
        piv = W[i][k]
        # reduce entries left of the pivot into [0, piv)
        for j in range(k):
            q = W[i][j] // piv
            if q:
                for M in (W, V):
                    for row in M:
                        row[j] -= q * row[k]
        pivots.append(i)
        k += 1

    r = len(pivots)
    biggest = max((abs(x) for row in V for x in row), default=0)
    logger.debug("hnf done", extra={"ctx": {"rows": m, "cols": cols, "rank": r, "max_entry_bits": biggest.bit_length()}})
    return HnfResult(
        U_part=tuple(tuple(row[:r]) for row in V),
        K_part=tuple(tuple(row[r:]) for row in V),
        H=tuple(tuple(row[:r]) for row in W),
        pivots=tuple(pivots),
    )
