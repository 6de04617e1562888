from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from src.app.errors import DimensionMismatchError, PolyhedronFormatError
from src.linalg.vectors import dot, mat_vec, transpose
from src.lp import Polyhedron, chebyshev_inner_ball, farkas_certificate, lp_feasible_point, lp_optimize, parse_polyhedron
from src.lp.polyhedron import polyhedron_to_doc

F = Fraction


def _verify_certificate(A, b, y):
    assert all(v >= 0 for v in y)
    assert all(v == 0 for v in mat_vec(transpose(A), y))
    assert dot(b, y) < 0


@st.composite
def small_systems(draw, max_n=4, max_m=6, bound=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=1, max_value=max_m))
    entry = st.integers(min_value=-bound, max_value=bound)
    A = [[draw(entry) for _ in range(n)] for _ in range(m)]
    b = [draw(entry) for _ in range(m)]
    return Polyhedron.from_rows(A, b, n)


@st.composite
def bounded_lps(draw, max_n=3, max_m=4):
    """Feasible at 0 and boxed, so the minimum always exists."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=0, max_value=max_m))
    entry = st.integers(min_value=-5, max_value=5)
    A = [[draw(entry) for _ in range(n)] for _ in range(m)]
    b = [draw(st.integers(min_value=0, max_value=5)) for _ in range(m)]
    for j in range(n):
        e = [int(k == j) for k in range(n)]
        A += [e, [-v for v in e]]
        b += [5, 5]
    c = [draw(entry) for _ in range(n)]
    return c, Polyhedron.from_rows(A, b, n)


# --- polyhedron -----------------------------------------------------------------


def test_parse_polyhedron_and_containment():
    P = parse_polyhedron('{"A": [["1", "0"], ["0", "-1/2"]], "b": ["3", "1"]}', 2)
    assert P.m == 2
    assert P.contains((F(3), F(-2)))
    assert not P.contains((F(4), F(0)))
    assert P.first_violated_row((F(0), F(-3))) == 1


def test_parse_polyhedron_none_is_whole_space():
    P = parse_polyhedron(None, 3)
    assert P.m == 0 and P.n == 3
    assert P.encoding_length() >= 3


def test_parse_polyhedron_rejects_wrong_width():
    with pytest.raises(PolyhedronFormatError):
        parse_polyhedron({"A": [["1"]], "b": ["0"]}, 2)


def test_parse_polyhedron_rejects_bad_json():
    with pytest.raises(PolyhedronFormatError):
        parse_polyhedron("{not json", 1)


def test_polyhedron_doc_uses_rat_strings():
    doc = polyhedron_to_doc(Polyhedron.from_rows([[F(1, 2)]], [F(-3)]))
    assert doc.A == [["1/2"]]
    assert doc.b == ["-3/1"]


def test_polyhedron_rejects_ragged_rows():
    with pytest.raises(DimensionMismatchError):
        Polyhedron.from_rows([[1, 0], [1]], [0, 0])


def test_pullback_drops_constant_rows():
    P = Polyhedron.from_rows([[1, 0], [0, 1]], [1, 2])
    Q = P.pullback((F(0), F(2)), [(F(1), F(0))])
    assert Q.n == 1 and Q.A == ((F(1),),) and Q.b == (F(1),)


# --- feasibility ----------------------------------------------------------------


def test_feasible_point_of_interval():
    out = lp_feasible_point(Polyhedron.from_rows([[1], [-1]], [1, 0]))
    assert out.status == "OPTIMAL"
    assert F(0) <= out.point[0] <= F(1)


def test_infeasible_interval_has_hand_certificate():
    A, b = [[1], [-1]], [-1, -2]
    out = lp_feasible_point(Polyhedron.from_rows(A, b))
    assert out.status == "INFEASIBLE"
    _verify_certificate(A, b, out.certificate)


def test_whole_space_feasible_point_is_origin():
    out = lp_feasible_point(Polyhedron.whole_space(2))
    assert out.status == "OPTIMAL" and out.point == (0, 0)


# --- optimization ---------------------------------------------------------------


def test_optimize_hits_vertex():
    out = lp_optimize([-1], Polyhedron.from_rows([[1]], [5]))
    assert out.status == "OPTIMAL"
    assert out.value == -5 and out.point == (F(5),)


def test_optimize_unbounded():
    assert lp_optimize([-1], Polyhedron.from_rows([[-1]], [0])).status == "UNBOUNDED"


def test_optimize_infeasible():
    out = lp_optimize([1], Polyhedron.from_rows([[1], [-1]], [-1, -2]))
    assert out.status == "INFEASIBLE"
    assert out.certificate is not None


def test_optimize_rejects_wrong_cost_length():
    with pytest.raises(DimensionMismatchError):
        lp_optimize([1, 2], Polyhedron.from_rows([[1]], [0]))


@settings(max_examples=50, deadline=None)
@given(bounded_lps())
def test_duality_from_final_basis(case):
    c, P = case
    out = lp_optimize(c, P)
    assert out.status == "OPTIMAL"
    assert P.contains(out.point)
    assert dot(c, out.point) == out.value
    if out.dual is None:
        return
    y = out.dual
    assert all(v >= 0 for v in y)
    assert tuple(mat_vec(transpose(P.A), y)) == tuple(-F(v) for v in c)
    assert -dot(P.b, y) == out.value


@settings(max_examples=100, deadline=None)
@given(small_systems())
def test_farkas_dichotomy(P):
    point = lp_feasible_point(P)
    cert = farkas_certificate(P.A, P.b)
    assert (point.status == "OPTIMAL") != (cert is not None)
    if cert is None:
        assert P.contains(point.point)
    else:
        _verify_certificate(P.A, P.b, cert)
        assert dot(P.b, cert) == -1


@settings(max_examples=50, deadline=None)
@given(bounded_lps())
def test_bland_never_repeats_a_phase_two_basis(case):
    c, P = case
    out = lp_optimize(c, P)
    n_vars = 2 * P.n + P.m
    assert len(out.basis_log) <= 2 * (comb(n_vars + P.m, P.m) + 1) + P.m
    phase_two = [basis for phase, basis in out.basis_log if phase == 2]
    assert len(phase_two) == len(set(phase_two))


# --- farkas ---------------------------------------------------------------------


def test_farkas_normalized_certificate():
    y = farkas_certificate([[1], [-1]], [-1, -2])
    assert y == (F(1, 3), F(1, 3))


def test_farkas_absent_for_feasible_system():
    assert farkas_certificate([[1], [-1]], [1, 0]) is None


def test_farkas_absent_without_rows():
    assert farkas_certificate([], []) is None


# --- chebyshev ball -------------------------------------------------------------


def test_chebyshev_unit_box():
    P = Polyhedron.from_rows([[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 1, 1, 1])
    center, rho = chebyshev_inner_ball(P, 10)
    assert rho == 1
    assert center == (0, 0)


def test_chebyshev_flat_polyhedron_has_zero_radius():
    P = Polyhedron.from_rows([[1, 0], [-1, 0]], [0, 0])
    _, rho = chebyshev_inner_ball(P, 10)
    assert rho == 0


def test_chebyshev_whole_line_uses_outer_ball():
    center, rho = chebyshev_inner_ball(Polyhedron.whole_space(1), 3)
    assert rho == 3 and center == (0,)


def test_chebyshev_ball_stays_inside_outer_ball():
    P = Polyhedron.from_rows([[1, 1]], [100])
    center, rho = chebyshev_inner_ball(P, 4)
    assert rho > 0
    # corner of the inscribed box around the center still lies in B_4
    corner = [abs(v) + rho for v in center]
    assert dot(corner, corner) <= 16
