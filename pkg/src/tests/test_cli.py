import orjson
import pytest

from src.cli.main import build_parser, main

QUARTIC = {"n": 1, "terms": [[1, 1, [4]], [1, 1, [1]]]}
NEG_X = {"n": 1, "terms": [[-1, 1, [1]]]}
HESSE = {"n": 5, "terms": [[1, 1, [1, 0, 0, 2, 0]], [2, 1, [0, 1, 0, 1, 1]], [1, 1, [0, 0, 1, 0, 2]]]}
CHAIN = {"n": 2, "terms": [[1, 1, [4, 0]], [-2, 1, [2, 1]], [2, 1, [0, 2]], [-4, 1, [0, 1]], [4, 1, [0, 0]]]}


@pytest.fixture
def write_json(tmp_path):
    def _write(name, payload):
        p = tmp_path / name
        p.write_bytes(orjson.dumps(payload))
        return str(p)

    return _write


def _cli(*args):
    return main([*args, "--log-level", "WARNING"])


def test_parser_requires_subcommand():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_solve_writes_result_file(write_json, tmp_path):
    out = tmp_path / "result.json"
    code = _cli(
        "solve",
        "--poly", write_json("f.json", NEG_X),
        "--constraints", write_json("p.json", {"A": [["1"]], "b": ["5"]}),
        "--eps", "1/1024",
        "--out", str(out),
    )
    assert code == 0
    doc = orjson.loads(out.read_bytes())
    assert doc["status"] == "SOLVED"
    assert out.read_bytes().endswith(b"\n")


def test_solve_unbounded_exit_code(write_json, capsysbinary):
    code = _cli(
        "solve",
        "--poly", write_json("f.json", NEG_X),
        "--constraints", write_json("p.json", {"A": [["-1"]], "b": ["0"]}),
    )
    assert code == 2
    doc = orjson.loads(capsysbinary.readouterr().out)
    assert doc["status"] == "UNBOUNDED"


def test_solve_empty_polyhedron_exit_code(write_json, capsysbinary):
    code = _cli(
        "solve",
        "--poly", write_json("f.json", QUARTIC),
        "--constraints", write_json("p.json", {"A": [["1"], ["-1"]], "b": ["-1", "-2"]}),
    )
    assert code == 3
    doc = orjson.loads(capsysbinary.readouterr().out)
    assert doc["status"] == "EMPTY_POLYHEDRON"


def test_decompose_hesse_exit_code(write_json, capsysbinary):
    code = _cli("decompose", "--poly", write_json("h.json", HESSE), "--mode", "exhaustive")
    assert code == 4
    assert "not_convex_evidence" in orjson.loads(capsysbinary.readouterr().out)


def test_bound_hesse_exit_code(write_json):
    assert _cli("bound", "--poly", write_json("h.json", HESSE), "--mode", "exhaustive") == 4


def test_certify_empty_exit_code(write_json):
    code = _cli(
        "certify-unbounded",
        "--poly", write_json("f.json", QUARTIC),
        "--constraints", write_json("p.json", {"A": [["1"], ["-1"]], "b": ["-1", "-2"]}),
    )
    assert code == 3


def test_check_convexity_violation(write_json, capsysbinary):
    code = _cli("check-convexity", "--poly", write_json("c.json", CHAIN), "--trials", "100", "--seed", "1")
    assert code == 4
    doc = orjson.loads(capsysbinary.readouterr().out)
    assert doc["status"] == "VIOLATION" and doc["seed"] == 1


def test_malformed_polynomial_is_internal_error(write_json):
    assert _cli("decompose", "--poly", write_json("bad.json", {"n": 1, "terms": [[1, 0, [2]]]})) == 1


def test_missing_file_is_internal_error(tmp_path):
    assert _cli("decompose", "--poly", str(tmp_path / "absent.json")) == 1


def test_bad_environment_is_internal_error(write_json, monkeypatch):
    monkeypatch.setenv("CONVEXPOLY_MODE", "greedy")
    assert _cli("decompose", "--poly", write_json("f.json", QUARTIC)) == 1
