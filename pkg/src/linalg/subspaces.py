from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from src.linalg.hnf import HnfResult, hnf_decompose
from src.linalg.vectors import (
    RatVector,
    Scalar,
    clear_denominators,
    dot,
    is_zero_vector,
    n_cols,
    zeros,
)


class GramSchmidtResult(NamedTuple):
    vectors: Tuple[RatVector, ...]
    source_indices: Tuple[int, ...]


def gram_schmidt(vectors: Sequence[Sequence[Scalar]]) -> GramSchmidtResult:
    """
    Exact orthogonalization in input order.

    Inputs that depend on earlier ones reduce to zero and are dropped;
    `source_indices[i]` is the input position of output i.
    """
    out: List[RatVector] = []
    norms: List[Fraction] = []
    idx: List[int] = []
    for k, v in enumerate(vectors):
        u = [Fraction(a) for a in v]
        for q, qq in zip(out, norms):
            c = dot(u, q) / qq
            if c:
                u = [a - c * b for a, b in zip(u, q)]
        if not is_zero_vector(u):
            t = tuple(u)
            out.append(t)
            norms.append(dot(t, t))
            idx.append(k)
    return GramSchmidtResult(tuple(out), tuple(idx))


def _integer_rows(A: Sequence[Sequence[Scalar]], b: Optional[Sequence[Scalar]] = None):
    rows, rhs = [], []
    for i, row in enumerate(A):
        full = list(row) + ([b[i]] if b is not None else [])
        _, ints = clear_denominators(full)
        if b is not None:
            rows.append(ints[:-1])
            rhs.append(ints[-1])
        else:
            rows.append(ints)
    return rows, rhs


def kernel_basis(A: Sequence[Sequence[Scalar]], n: Optional[int] = None) -> Tuple[RatVector, ...]:
    """Orthogonal basis of ker(A) from the HNF kernel columns."""
    rows, _ = _integer_rows(A)
    h = hnf_decompose(rows, n=n_cols(A, n or 0))
    return gram_schmidt(h.kernel_columns()).vectors


def _solve_hnf(h: HnfResult, rhs: Sequence[int]) -> Optional[RatVector]:
    """x with A x = rhs (A the HNF input), or None."""
    r = h.rank
    y: List[Fraction] = []
    for t, row_i in enumerate(h.pivots):
        acc = Fraction(rhs[row_i]) - sum((h.H[row_i][s] * y[s] for s in range(t)), Fraction(0))
        y.append(acc / h.H[row_i][t])
    for i, row in enumerate(h.H):
        if sum((row[s] * y[s] for s in range(r)), Fraction(0)) != rhs[i]:
            return None
    n = len(h.U_part)
    return tuple(sum((Fraction(h.U_part[j][s]) * y[s] for s in range(r)), Fraction(0)) for j in range(n))


@dataclass(frozen=True)
class InverseImageSplit:
    kernel_basis: Tuple[RatVector, ...]
    w: RatVector
    complement_basis: Tuple[RatVector, ...]

    @property
    def has_solution(self) -> bool:
        return not is_zero_vector(self.w)


def inverse_image_split(A: Sequence[Sequence[Scalar]], b: Sequence[Scalar], n: Optional[int] = None) -> InverseImageSplit:
    """
    Split R^N into ker(A), span(w) and their orthogonal complement.

    w solves A w = b and is orthogonal to ker(A), or is 0 when A x = b has no
    solution (or b = 0). Orthogonalization order: kernel columns, the
    particular solution, then the remaining unimodular columns.
    """
    N = n_cols(A, n or 0)
    rows, rhs = _integer_rows(A, b)
    h = hnf_decompose(rows, n=N)
    kernel_cols = h.kernel_columns()
    x0 = _solve_hnf(h, rhs)

    seq: List[Sequence] = list(kernel_cols)
    x0_pos = -1
    if x0 is not None:
        x0_pos = len(seq)
        seq.append(x0)
    first_image = len(seq)
    seq.extend(h.image_columns())

    gs = gram_schmidt(seq)
    kernel, complement = [], []
    w = zeros(N)
    for vec, src in zip(gs.vectors, gs.source_indices):
        if src < len(kernel_cols):
            kernel.append(vec)
        elif src == x0_pos:
            w = vec
        elif src >= first_image:
            complement.append(vec)
    return InverseImageSplit(tuple(kernel), w, tuple(complement))
