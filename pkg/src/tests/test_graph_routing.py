from fractions import Fraction

from langgraph.graph import END

from src.graph.build_graph import build_graph, compiled_graph
from src.graph.routers import route_after_certify, route_after_feasibility, route_after_structure
from src.graph.state import GRAPH_VERSION, SolveOptions, initial_state
from src.lp import Polyhedron
from src.polynomial.catalog import hesse_polynomial
from src.tests.helpers import affine_form, poly


def _state(routing):
    return {"pipeline": {"routing": routing}}


def _run(f, P, eps=Fraction(1, 100)):
    return compiled_graph().invoke(initial_state(f, P, eps, SolveOptions()))


def test_routers_follow_recorded_status():
    assert route_after_feasibility(_state({"feasibility": "EMPTY"})) == END
    assert route_after_feasibility(_state({"feasibility": "FEASIBLE"})) == "structure"
    assert route_after_structure(_state({"structure": "NOT_CONVEX_EVIDENCE"})) == END
    assert route_after_structure(_state({"structure": "OK"})) == "certify"
    assert route_after_certify(_state({"certify": "UNBOUNDED"})) == END
    assert route_after_certify(_state({"certify": "BOUNDED"})) == "radius"


def test_routers_tolerate_missing_pipeline():
    assert route_after_feasibility({}) == "structure"
    assert route_after_certify({"pipeline": {}}) == "radius"


def test_graph_has_all_stages():
    nodes = set(build_graph().nodes)
    assert nodes == {"feasibility", "structure", "certify", "radius", "ellipsoid"}


def test_initial_state_shape():
    s = initial_state(poly(1, ((2,), 1)), Polyhedron.whole_space(1), Fraction(1, 10), SolveOptions())
    assert s["pipeline"]["graph_version"] == GRAPH_VERSION
    assert s["pipeline"]["stages_run"] == []
    assert s["outputs"] == {}


def test_empty_polyhedron_stops_after_feasibility():
    out = _run(poly(1, ((2,), 1)), Polyhedron.from_rows([[1], [-1]], [-1, -2]))
    assert out["pipeline"]["stages_run"] == ["feasibility"]
    assert out["outputs"]["feasibility"]["status"] == "EMPTY"


def test_not_convex_stops_after_structure():
    out = _run(hesse_polynomial(), Polyhedron.whole_space(5))
    assert out["pipeline"]["stages_run"] == ["feasibility", "structure"]
    assert out["pipeline"]["routing"]["structure"] == "NOT_CONVEX_EVIDENCE"


def test_unbounded_stops_after_certify():
    out = _run(affine_form([-1]), Polyhedron.from_rows([[-1]], [0]))
    assert out["pipeline"]["stages_run"] == ["feasibility", "structure", "certify"]
    assert out["outputs"]["certify"]["certificate"].ray == (1,)


def test_bounded_runs_every_stage():
    out = _run(affine_form([-1]), Polyhedron.from_rows([[1]], [5]))
    assert out["pipeline"]["stages_run"] == ["feasibility", "structure", "certify", "radius", "ellipsoid"]
    assert set(out["pipeline"]["timings_ms"]) == set(out["pipeline"]["stages_run"])
    assert out["outputs"]["minimize"].value <= -5 + Fraction(1, 100)
