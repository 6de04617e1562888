import pytest
from fastapi.testclient import TestClient

from src.api import api as api_module

QUARTIC = {"n": 1, "terms": [[1, 1, [4]], [1, 1, [1]]]}
NEG_X = {"n": 1, "terms": [[-1, 1, [1]]]}
HESSE = {"n": 5, "terms": [[1, 1, [1, 0, 0, 2, 0]], [2, 1, [0, 1, 0, 1, 1]], [1, 1, [0, 0, 1, 0, 2]]]}
EMPTY = {"A": [["1"], ["-1"]], "b": ["-1", "-2"]}


@pytest.fixture
def client(monkeypatch):
    monkeypatch.setattr(api_module, "_settings", None)
    return TestClient(api_module.app)


def test_health(client):
    r = client.get("/api/health")
    assert r.status_code == 200
    assert r.json() == {"status": "healthy", "version": api_module.API_VERSION, "eps_default": "1/1048576"}


def test_solve_linear_on_half_line(client):
    r = client.post(
        "/api/v1/solve",
        json={"poly": NEG_X, "constraints": {"A": [["1"]], "b": ["5"]}, "eps": "1/1024"},
    )
    assert r.status_code == 200
    assert r.headers["X-Convexpoly-Exit-Code"] == "0"
    assert r.json()["status"] == "SOLVED"


def test_solve_empty_polyhedron_is_conflict(client):
    r = client.post("/api/v1/solve", json={"poly": QUARTIC, "constraints": EMPTY, "eps": "1/10"})
    assert r.status_code == 409
    assert r.json()["status"] == "EMPTY_POLYHEDRON"


def test_certify_unbounded(client):
    r = client.post("/api/v1/certify-unbounded", json={"poly": NEG_X, "constraints": {"A": [["-1"]], "b": ["0"]}})
    assert r.status_code == 200
    assert r.headers["X-Convexpoly-Exit-Code"] == "2"
    assert r.json()["status"] == "UNBOUNDED"


def test_certify_empty_is_conflict(client):
    r = client.post("/api/v1/certify-unbounded", json={"poly": QUARTIC, "constraints": EMPTY})
    assert r.status_code == 409


def test_decompose_quartic(client):
    r = client.post("/api/v1/decompose", json={"poly": QUARTIC})
    assert r.status_code == 200
    assert r.json()["mu"] == "3/8"


def test_bound_on_hesse_is_unprocessable(client):
    r = client.post("/api/v1/bound", json={"poly": HESSE, "mode": "exhaustive"})
    assert r.status_code == 422
    assert "not convex" in r.json()["detail"]


def test_check_convexity_reports_exit_code(client):
    r = client.post("/api/v1/check-convexity", json={"poly": QUARTIC, "trials": 20})
    assert r.status_code == 200
    assert r.headers["X-Convexpoly-Exit-Code"] == "0"
    assert r.json()["status"] == "NO_VIOLATION"


def test_request_validation(client):
    r = client.post("/api/v1/solve", json={"poly": {"n": 1, "terms": [[1, 1, [1, 2]]]}})
    assert r.status_code == 422
    r = client.post("/api/v1/check-convexity", json={"poly": QUARTIC, "trials": 0})
    assert r.status_code == 422


def test_bad_eps_is_unprocessable(client):
    r = client.post("/api/v1/solve", json={"poly": QUARTIC, "eps": "one tenth"})
    assert r.status_code == 422
