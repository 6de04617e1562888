from __future__ import annotations

from src.polynomial.sparse import SparsePolynomial


def hesse_polynomial() -> SparsePolynomial:
    """x1*x4^2 + 2*x2*x4*x5 + x3*x5^2: singular Hessian everywhere, not convex."""
    return SparsePolynomial(5, {
        (1, 0, 0, 2, 0): 1,
        (0, 1, 0, 1, 1): 2,
        (0, 0, 1, 0, 2): 1,
    })


def quartic_example() -> SparsePolynomial:
    """x^4 + x, minimized at -4^(-1/3) with value -(3/4) * 4^(-1/3)."""
    return SparsePolynomial(1, {(4,): 1, (1,): 1})


def sextic_example() -> SparsePolynomial:
    """(x^3 + x + 1)^2: minimum 0 at the irrational real root of the cubic."""
    cubic = SparsePolynomial(1, {(3,): 1, (1,): 1, (0,): 1})
    return cubic ** 2


def nonconvex_chain(n: int) -> SparsePolynomial:
    """(x1^2 - x2)^2 + ... + (x_{n-1}^2 - x_n)^2 + (x_n - 2)^2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = [SparsePolynomial.variable(n, i) for i in range(n)]
    f = (x[n - 1] - 2) ** 2
    for i in range(n - 1):
        f = f + (x[i] ** 2 - x[i + 1]) ** 2
    return f
