from __future__ import annotations

from fractions import Fraction
from typing import List, Literal, Sequence

from src.app.errors import AsymmetricMatrixError, NotPositiveDefiniteError, NotSquareError
from src.linalg.vectors import Scalar, clear_denominators, is_symmetric

Definiteness = Literal["POSITIVE_DEFINITE", "POSITIVE_SEMIDEFINITE_SINGULAR", "INDEFINITE"]


def _require_square(M: Sequence[Sequence[Scalar]]) -> int:
    n = len(M)
    if any(len(r) != n for r in M):
        raise NotSquareError(f"expected a square matrix, got {n} rows of lengths {sorted({len(r) for r in M})}")
    return n


def bareiss_det(M: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant: rows are scaled to integers, then fraction-free Bareiss elimination."""
    n = _require_square(M)
    if n == 0:
        return Fraction(1)
    scale = 1
    W: List[List[int]] = []
    for row in M:
        d, ints = clear_denominators(row)
        scale *= d
        W.append(list(ints))

    sign = 1
    prev = 1
    for k in range(n - 1):
        if W[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if W[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            W[k], W[swap] = W[swap], W[k]
            sign = -sign
        pk = W[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                W[i][j] = (W[i][j] * pk - W[i][k] * W[k][j]) // prev
            W[i][k] = 0
        prev = pk
    return Fraction(sign * W[n - 1][n - 1], scale)


def ldlt_definiteness(M: Sequence[Sequence[Scalar]]) -> Definiteness:
    """
    Classify a symmetric matrix by exact LDL^T with full symmetric pivoting.

    The largest remaining diagonal entry is eliminated first. A negative
    diagonal, or a nonzero off-diagonal entry once the remaining diagonal is
    all zero, means indefinite.
    """
    n = _require_square(M)
    if not is_symmetric(M):
        raise AsymmetricMatrixError("ldlt_definiteness needs a symmetric matrix")
    S = [[Fraction(a) for a in row] for row in M]
    active = list(range(n))
    while active:
        best = active[0]
        for i in active:
            if S[i][i] < 0:
                return "INDEFINITE"
            if S[i][i] > S[best][best]:
                best = i
        d = S[best][best]
        if d == 0:
            if any(S[i][j] != 0 for i in active for j in active):
                return "INDEFINITE"
            return "POSITIVE_SEMIDEFINITE_SINGULAR"
        active.remove(best)
        col = {i: S[i][best] for i in active}
        for i in active:
            ci = col[i]
            if ci == 0:
                continue
            f = ci / d
            for j in active:
                if j >= i and col[j] != 0:
                    S[i][j] -= f * col[j]
                    S[j][i] = S[i][j]
    return "POSITIVE_DEFINITE"


def is_positive_definite(M: Sequence[Sequence[Scalar]]) -> bool:
    return ldlt_definiteness(M) == "POSITIVE_DEFINITE"


def lambda_min_lower_bound(M: Sequence[Sequence[Scalar]]) -> Fraction:
    """
    Certified 0 < mu_hat <= lambda_min(M) for positive definite M.

    lambda_max <= N * max|M_ij|, so det(M) / (N * max|M_ij|)^(N-1) is below the
    smallest eigenvalue.
    """
    n = _require_square(M)
    if ldlt_definiteness(M) != "POSITIVE_DEFINITE":
        raise NotPositiveDefiniteError("lambda_min_lower_bound needs a positive definite matrix")
    if n == 1:
        return Fraction(M[0][0])
    b_bar = max(abs(Fraction(a)) for row in M for a in row)
    return bareiss_det(M) / (n * b_bar) ** (n - 1)
