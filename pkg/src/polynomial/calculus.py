from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.app.errors import DimensionMismatchError
from src.polynomial.sparse import Exponent, Scalar, SparsePolynomial, evaluate


def partial_derivative(p: SparsePolynomial, i: int) -> SparsePolynomial:
    """dp/dx_i with 0-based i."""
    if not 0 <= i < p.n:
        raise DimensionMismatchError(f"derivative index {i} out of range for n={p.n}")
    out: Dict[Exponent, Fraction] = {}
    for alpha, c in p.terms.items():
        e = alpha[i]
        if e:
            beta = alpha[:i] + (e - 1,) + alpha[i + 1:]
            out[beta] = c * e
    return SparsePolynomial._raw(p.n, out)


def gradient_polynomials(p: SparsePolynomial) -> Tuple[SparsePolynomial, ...]:
    return tuple(partial_derivative(p, i) for i in range(p.n))


def hessian_polynomials(p: SparsePolynomial) -> Tuple[Tuple[SparsePolynomial, ...], ...]:
    """Symmetric table of second partials; entries below the diagonal are shared."""
    grads = gradient_polynomials(p)
    rows: List[List[SparsePolynomial]] = [[None] * p.n for _ in range(p.n)]  # type: ignore[list-item]
    for i in range(p.n):
        for j in range(i, p.n):
            h = partial_derivative(grads[i], j)
            rows[i][j] = h
            rows[j][i] = h
    return tuple(tuple(r) for r in rows)


def directional_derivative(p: SparsePolynomial, v: Sequence[Scalar]) -> SparsePolynomial:
    """sum_i v_i * dp/dx_i as a polynomial."""
    if len(v) != p.n:
        raise DimensionMismatchError(f"direction has length {len(v)}, polynomial has n={p.n}")
    out = SparsePolynomial.zero(p.n)
    for i, vi in enumerate(v):
        if vi:
            out = out + partial_derivative(p, i).scale(vi)
    return out


def gradient_at(p: SparsePolynomial, a: Sequence[Scalar]) -> Tuple[Fraction, ...]:
    if len(a) != p.n:
        raise DimensionMismatchError(f"point has length {len(a)}, polynomial has n={p.n}")
    return tuple(evaluate(partial_derivative(p, i), a) for i in range(p.n))


def hessian_at(p: SparsePolynomial, a: Sequence[Scalar]) -> Tuple[Tuple[Fraction, ...], ...]:
    if len(a) != p.n:
        raise DimensionMismatchError(f"point has length {len(a)}, polynomial has n={p.n}")
    table = hessian_polynomials(p)
    vals = [[Fraction(0)] * p.n for _ in range(p.n)]
    for i in range(p.n):
        for j in range(i, p.n):
            v = evaluate(table[i][j], a)
            vals[i][j] = v
            vals[j][i] = v
    return tuple(tuple(r) for r in vals)


def substitute_affine(
    p: SparsePolynomial,
    basis: Sequence[Sequence[Scalar]],
    offset: Sequence[Scalar],
) -> SparsePolynomial:
    """
    q(y) = p(offset + sum_i y_i * basis_i), expanded.

    The result has one variable per basis vector; an empty basis yields the
    constant p(offset) with arity 0.
    """
    m = len(basis)
    if len(offset) != p.n:
        raise DimensionMismatchError(f"offset has length {len(offset)}, polynomial has n={p.n}")
    for k, vec in enumerate(basis):
        if len(vec) != p.n:
            raise DimensionMismatchError(f"basis vector {k} has length {len(vec)}, polynomial has n={p.n}")

    # image of each original variable x_j as an affine polynomial in y
    images: List[SparsePolynomial] = []
    for j in range(p.n):
        terms: Dict[Exponent, Fraction] = {}
        if offset[j]:
            terms[(0,) * m] = Fraction(offset[j])
        for i in range(m):
            if basis[i][j]:
                terms[tuple(1 if t == i else 0 for t in range(m))] = Fraction(basis[i][j])
        images.append(SparsePolynomial._raw(m, terms))

    powers: List[List[SparsePolynomial]] = [[SparsePolynomial.constant(m, 1)] for _ in range(p.n)]
    out = SparsePolynomial.zero(m)
    for alpha, c in p.terms.items():
        t = SparsePolynomial.constant(m, c)
        for j, e in enumerate(alpha):
            if e:
                pw = powers[j]
                while len(pw) <= e:
                    pw.append(pw[-1] * images[j])
                t = t * pw[e]
        out = out + t
    return out
