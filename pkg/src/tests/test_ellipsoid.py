from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from src.app.errors import EmptyPolyhedronError, OracleContractError
from src.ellipsoid import (
    Cut,
    IntersectionOracle,
    affine_hull,
    ellipsoid_feasibility,
    full_dim_reduce,
    lipschitz_bound,
    minimize_over_ball,
    oracle_ball,
    oracle_polyhedron,
    oracle_sublevel,
)
from src.ellipsoid.method import round_dyadic
from src.ellipsoid.reduction import transfer_radius
from src.linalg.vectors import dot, norm_sq, solve_linear_system, sub
from src.lp import Polyhedron, lp_optimize
from src.polynomial.catalog import quartic_example
from src.polynomial.sparse import SparsePolynomial, evaluate
from src.tests.helpers import affine_form, poly, rational_points

F = Fraction


def _box(lo, hi, n=2):
    A, b = [], []
    for j in range(n):
        e = [int(k == j) for k in range(n)]
        A += [e, [-v for v in e]]
        b += [hi, -lo]
    return Polyhedron.from_rows(A, b, n)


def _inside_ellipsoid(state, x) -> bool:
    d = sub(x, state.center)
    y = solve_linear_system(state.shape, d)
    return dot(d, y) <= 1


# -----------------------------
# oracles
# -----------------------------

def test_polyhedron_oracle_reports_violated_row():
    o = oracle_polyhedron(_box(-1, 1))
    assert o.query((F(0), F(0))).kind == "INSIDE"
    ans = o.query((F(2), F(0)))
    assert ans.kind == "SEPARATED" and ans.cut.normal == (1, 0)
    assert oracle_polyhedron(Polyhedron.whole_space(2)).query((F(9), F(9))).kind == "INSIDE"


def test_ball_oracle():
    o = oracle_ball(2)
    assert o.query((F(1), F(1))).kind == "INSIDE"
    assert o.query((F(0), F(0))).kind == "INSIDE"
    ans = o.query((F(3), F(0)))
    assert ans.kind == "SEPARATED" and ans.cut.normal == (3, 0)


def test_ball_oracle_rejects_nonpositive_radius():
    with pytest.raises(ValueError):
        oracle_ball(0)


def test_sublevel_oracle_examples():
    f = quartic_example()
    assert oracle_sublevel(f, 2).query((F(1),)).kind == "INSIDE"
    ans = oracle_sublevel(f, 0).query((F(2),))
    assert ans.kind == "SEPARATED" and ans.cut.normal == (33,)
    flat = oracle_sublevel(poly(1, ((2,), 1)), -1).query((F(0),))
    assert flat.kind == "INFEASIBLE_EVERYWHERE"


def test_intersection_oracle_first_cut_wins():
    o = IntersectionOracle(oracle_polyhedron(_box(-1, 1)), oracle_ball(F(1, 2)))
    assert o.query((F(3), F(0))).cut.normal == (1, 0)
    assert o.query((F(1), F(0))).cut.normal == (1, 0)
    assert o.query((F(0), F(0))).kind == "INSIDE"


def test_cut_rejects_zero_normal():
    with pytest.raises(OracleContractError):
        Cut((F(0), F(0)))


@settings(max_examples=30, deadline=None)
@given(rational_points(2), st.lists(rational_points(2, max_num=4, max_den=3), min_size=1, max_size=20))
def test_separating_cuts_are_sound(y, candidates):
    P = _box(-1, 1)
    f = poly(2, ((2, 0), 1), ((0, 2), 1), ((1, 0), -1))
    tau = F(2)
    feasible = [z for z in candidates if P.contains(z) and norm_sq(z) <= 4 and evaluate(f, z) <= tau]
    for oracle in (oracle_polyhedron(P), oracle_ball(2), oracle_sublevel(f, tau)):
        ans = oracle.query(y)
        if ans.kind != "SEPARATED":
            continue
        c = ans.cut.normal
        for z in feasible:
            assert dot(c, z) < dot(c, y)


# -----------------------------
# feasibility
# -----------------------------

def test_feasibility_finds_point_in_box():
    K = _box(2, 3)
    res = ellipsoid_feasibility(oracle_polyhedron(K), 4, F(1, 10 ** 6), 2)
    assert res.kind == "POINT"
    assert K.contains(res.point)


def test_feasibility_empty_slab_is_small_volume():
    K = Polyhedron.from_rows([[1, 0], [-1, 0]], [-1, -2])
    oracle = IntersectionOracle(oracle_polyhedron(K), oracle_ball(4))
    res = ellipsoid_feasibility(oracle, 4, F(1, 1000), 2)
    assert res.kind == "SMALL_VOLUME" and res.point is None


def test_feasibility_ball_is_found_at_start():
    res = ellipsoid_feasibility(oracle_ball(3), 3, F(1, 100), 2)
    assert res.kind == "POINT" and res.iterations == 0
    assert res.point == (0, 0)


def test_feasibility_rejects_nonpositive_radii():
    with pytest.raises(ValueError):
        ellipsoid_feasibility(oracle_ball(1), 0, 1, 1)


def test_feasibility_infeasible_everywhere_short_circuits():
    res = ellipsoid_feasibility(oracle_sublevel(poly(1, ((2,), 1)), -1), 4, F(1, 100), 1)
    assert res.kind == "SMALL_VOLUME" and res.iterations == 0


@pytest.mark.parametrize(
    "K, witness",
    [
        (_box(2, 3), (F(5, 2), F(5, 2))),
        (_box(F(-7, 2), F(-3), n=2), (F(-13, 4), F(-13, 4))),
        (Polyhedron.from_rows([[1], [-1]], [F(5, 2), -2]), (F(9, 4),)),
    ],
)
def test_ellipsoid_keeps_feasible_region(K, witness):
    states = []
    res = ellipsoid_feasibility(oracle_polyhedron(K), 5, F(1, 10 ** 4), K.n, on_step=states.append)
    assert res.kind == "POINT"
    assert len(states) == res.iterations + 1
    for state in states:
        assert _inside_ellipsoid(state, witness)


def test_round_dyadic_keeps_significant_bits():
    x = F(1, 3)
    r = round_dyadic(x, 20)
    assert r.denominator & (r.denominator - 1) == 0
    assert abs(r - x) <= F(1, 1 << 20)
    assert round_dyadic(F(0), 8) == 0


# -----------------------------
# affine hull and reduction
# -----------------------------

def test_affine_hull_of_line():
    hull = affine_hull(Polyhedron.from_rows([[1, 0], [-1, 0]], [0, 0]))
    assert hull.dimension == 1
    assert hull.point[0] == 0
    d = hull.directions[0]
    assert d[0] == 0 and d[1] != 0
    assert hull.tight_rows == (0, 1)


def test_affine_hull_of_full_box():
    hull = affine_hull(_box(-1, 1))
    assert hull.dimension == 2 and hull.tight_rows == ()


def test_affine_hull_of_point():
    hull = affine_hull(Polyhedron.from_rows([[1], [-1]], [0, 0]))
    assert hull.dimension == 0 and hull.point == (0,)


def test_affine_hull_of_empty_polyhedron():
    with pytest.raises(EmptyPolyhedronError):
        affine_hull(Polyhedron.from_rows([[1], [-1]], [-1, -2]))


def test_reduce_line_to_whole_axis():
    f = poly(2, ((2, 0), 1), ((0, 1), 1))
    P = Polyhedron.from_rows([[1, 0], [-1, 0]], [0, 0])
    red = full_dim_reduce(f, P, affine_hull(P))
    assert red.P.n == 1 and red.P.m == 0
    assert red.f.degree == 1


@settings(max_examples=25, deadline=None)
@given(rational_points(1))
def test_pullback_is_exact(x):
    f = poly(2, ((2, 0), 1), ((0, 2), 3), ((1, 1), -1))
    P = Polyhedron.from_rows([[1, 1], [-1, -1], [0, 1]], [2, -2, 5])
    red = full_dim_reduce(f, P, affine_hull(P))
    assert evaluate(red.f, x) == evaluate(f, red.lift(x))
    assert red.P.contains(x) == P.contains(red.lift(x))


def test_transfer_radius_for_full_space():
    hull = affine_hull(Polyhedron.whole_space(1))
    assert transfer_radius(7, hull) >= 7


# -----------------------------
# lipschitz bound
# -----------------------------

def test_lipschitz_examples():
    assert lipschitz_bound(affine_form([1]), 5) >= 1
    assert lipschitz_bound(quartic_example(), 2) == 33
    assert lipschitz_bound(SparsePolynomial.constant(1, 4), 3) == 0


@settings(max_examples=25, deadline=None)
@given(rational_points(1, max_num=2, max_den=1))
def test_lipschitz_dominates_gradient_in_ball(y):
    f = quartic_example()
    L = lipschitz_bound(f, 2)
    assert abs(4 * y[0] ** 3 + 1) <= L


# -----------------------------
# minimization
# -----------------------------

def test_minimize_linear_on_half_line():
    eps = F(1, 1 << 10)
    P = Polyhedron.from_rows([[1]], [5])
    res = minimize_over_ball(affine_form([-1]), P, 10, eps)
    assert P.contains(res.point)
    assert res.value <= -5 + eps
    assert res.value <= res.tau_high


def test_minimize_quartic_example():
    eps = F(1, 10 ** 4)
    res = minimize_over_ball(quartic_example(), Polyhedron.whole_space(1), 2, eps)
    x_star = mpmath.findroot(lambda x: 4 * x ** 3 + 1, -0.6)
    f_min = x_star ** 4 + x_star
    assert mpmath.mpf(res.value.numerator) / res.value.denominator <= f_min + mpmath.mpf(1) / 10 ** 4
    assert res.reduced_dim == 1


def test_minimize_square():
    eps = F(1, 10 ** 6)
    res = minimize_over_ball(poly(1, ((2,), 1)), Polyhedron.whole_space(1), 1, eps)
    assert res.value <= eps


def test_minimize_on_single_point():
    res = minimize_over_ball(poly(1, ((2,), 1)), Polyhedron.from_rows([[1], [-1]], [2, -2]), 5, F(1, 10))
    assert res.point == (2,) and res.value == 4
    assert res.bisection_steps == 0


def test_minimize_rejects_nonpositive_eps():
    with pytest.raises(ValueError):
        minimize_over_ball(poly(1, ((2,), 1)), Polyhedron.whole_space(1), 1, 0)


def test_bisection_keeps_level_bracket():
    eps = F(1, 100)
    res = minimize_over_ball(quartic_example(), Polyhedron.whole_space(1), 2, eps)
    x_star = -mpmath.cbrt(mpmath.mpf(1) / 4)
    f_min = x_star ** 4 + x_star
    for tau, found in res.tau_history:
        if not found:
            assert mpmath.mpf(tau.numerator) / tau.denominator <= f_min + mpmath.mpf(eps.numerator) / eps.denominator / 2
    assert any(found for _, found in res.tau_history)
    assert res.tau_high - res.tau_low < eps / 2


@pytest.mark.slow
def test_minimize_two_dimensional_box():
    eps = F(1, 10)
    P = _box(1, 2)
    f = poly(2, ((2, 0), 1), ((0, 2), 1))
    res = minimize_over_ball(f, P, 4, eps)
    assert P.contains(res.point)
    assert res.value <= 2 + eps
    assert res.reduced_dim == 2


@st.composite
def bounded_polytopes(draw, max_n: int = 3):
    """Box [-s, s]^n cut by up to two extra rows that keep the origin interior."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    side = draw(st.integers(min_value=1, max_value=4))
    A, b = [], []
    for j in range(n):
        e = [int(k == j) for k in range(n)]
        A += [e, [-v for v in e]]
        b += [side, side]
    for _ in range(draw(st.integers(min_value=0, max_value=2))):
        row = draw(st.lists(st.integers(min_value=-3, max_value=3), min_size=n, max_size=n))
        if any(row):
            A.append(row)
            b.append(draw(st.integers(min_value=1, max_value=6)))
    return Polyhedron.from_rows(A, b, n), side


@pytest.mark.slow
@settings(max_examples=20, deadline=None)
@given(bounded_polytopes(), st.data())
def test_minimize_linear_objective_matches_simplex(polytope, data):
    P, side = polytope
    c = data.draw(st.lists(st.integers(min_value=-5, max_value=5), min_size=P.n, max_size=P.n))
    eps = F(1, 1 << 16)
    opt = lp_optimize(c, P)
    assert opt.status == "OPTIMAL"
    res = minimize_over_ball(affine_form(c), P, side * P.n, eps)
    assert P.contains(res.point)
    assert res.value == dot(c, res.point)
    assert opt.value <= res.value <= opt.value + eps
