from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from hypothesis import strategies as st

from src.polynomial.sparse import SparsePolynomial


def poly(n: int, *terms: Tuple[Sequence[int], object]) -> SparsePolynomial:
    """poly(2, ((2, 0), 1), ((0, 1), -3)) = x1^2 - 3 x2."""
    return SparsePolynomial(n, {tuple(e): Fraction(c) for e, c in terms})


def affine_form(coeffs: Sequence[object], const: object = 0) -> SparsePolynomial:
    return SparsePolynomial.linear([Fraction(c) for c in coeffs], Fraction(const))


def small_fractions(max_num: int = 10, max_den: int = 4) -> st.SearchStrategy[Fraction]:
    return st.builds(
        Fraction,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def rational_points(n: int, max_num: int = 10, max_den: int = 4) -> st.SearchStrategy[Tuple[Fraction, ...]]:
    return st.tuples(*[small_fractions(max_num, max_den) for _ in range(n)])


def int_matrices(max_rows: int = 4, max_cols: int = 4, bound: int = 6) -> st.SearchStrategy[List[List[int]]]:
    @st.composite
    def _draw(draw):
        m = draw(st.integers(min_value=1, max_value=max_rows))
        n = draw(st.integers(min_value=1, max_value=max_cols))
        entry = st.integers(min_value=-bound, max_value=bound)
        return [[draw(entry) for _ in range(n)] for _ in range(m)]

    return _draw()


@st.composite
def convex_instances(draw, max_n: int = 3, max_forms: int = 2, powers: Sequence[int] = (2, 4, 6)):
    """Sum of even powers (degree up to 6) of rational affine forms plus a linear term."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    forms = draw(st.integers(min_value=1, max_value=max_forms))
    coef = st.integers(min_value=-3, max_value=3)
    f = SparsePolynomial.zero(n)
    for _ in range(forms):
        a = [draw(coef) for _ in range(n)]
        if all(v == 0 for v in a):
            a[0] = 1
        power = draw(st.sampled_from(powers))
        weight = Fraction(draw(st.integers(min_value=1, max_value=3)), draw(st.integers(min_value=1, max_value=2)))
        f = f + affine_form(a, draw(coef)) ** power * weight
    lin = [draw(coef) for _ in range(n)]
    return f + affine_form(lin)
