from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from dotenv import load_dotenv

load_dotenv()  # Load .env file

from pydantic import BaseModel

from src.app.errors import EmptyPolyhedronError, NotConvexEvidence
from src.app.logging import setup_logging
from src.app.settings import Settings, load_settings
from src.bounds.certificates import farkas_witness, unboundedness_ray
from src.bounds.radius import radius_R
from src.core.hashing import sha256_of_document
from src.core.rationals import RationalLike, parse_rational, to_decimal_string, to_rat_string
from src.graph.state import SolveOptions
from src.lp.polyhedron import Polyhedron, parse_polyhedron, polyhedron_to_doc
from src.lp.solvers import lp_feasible_point
from src.polynomial.parsing import PolynomialSource, parse_polynomial, polynomial_to_doc
from src.polynomial.sparse import SparsePolynomial
from src.schemas.io_schema import (
    BoundDoc,
    CertifyDoc,
    ConvexityDoc,
    DecomposeDoc,
    RationalOut,
    SolveResultDoc,
    WitnessDoc,
)
from src.solver.convexity import sampled_convexity_check
from src.solver.solve import SolveOutcome, solve
from src.structure.decomposition import decompose
from src.structure.pipeline import structure_with_bound

EXIT_SOLVED = 0
EXIT_INTERNAL = 1
EXIT_UNBOUNDED = 2
EXIT_EMPTY_POLYHEDRON = 3
EXIT_NOT_CONVEX = 4

_STATUS_EXIT = {
    "SOLVED": EXIT_SOLVED,
    "UNBOUNDED": EXIT_UNBOUNDED,
    "EMPTY_POLYHEDRON": EXIT_EMPTY_POLYHEDRON,
    "NOT_CONVEX_EVIDENCE": EXIT_NOT_CONVEX,
}


@dataclass(frozen=True)
class RunResult:
    doc: BaseModel
    exit_code: int


def configure(log_level: Optional[str] = None) -> Settings:
    s = load_settings()
    setup_logging(log_level or s.log_level)
    return s


def rat_out(q: Fraction) -> RationalOut:
    return RationalOut(rat=to_rat_string(q), dec=to_decimal_string(q))


def vec_out(v: Sequence[Fraction]) -> List[RationalOut]:
    return [rat_out(x) for x in v]


def _strs(v: Sequence[Fraction]) -> List[str]:
    return [to_rat_string(x) for x in v]


def load_problem(
    poly: PolynomialSource,
    constraints: Any = None,
) -> Tuple[SparsePolynomial, Polyhedron]:
    f = parse_polynomial(poly)
    return f, parse_polyhedron(constraints, f.n)


def input_digest(f: SparsePolynomial, P: Polyhedron, eps: Optional[Fraction] = None) -> str:
    doc: Dict[str, Any] = {
        "poly": polynomial_to_doc(f).model_dump(mode="json"),
        "constraints": polyhedron_to_doc(P).model_dump(mode="json"),
    }
    if eps is not None:
        doc["eps"] = to_rat_string(eps)
    return sha256_of_document(doc)


def solve_options(settings: Settings, *, seed: Optional[int] = None, mode: Optional[str] = None) -> SolveOptions:
    return SolveOptions.from_settings(settings, seed=seed, mode=mode)


def outcome_document(outcome: SolveOutcome, digest: str) -> SolveResultDoc:
    diag: Dict[str, Any] = {"input_sha256": digest}
    st = outcome.structure
    if st is not None:
        dec = st.decomposition
        diag["k"] = dec.k
        diag["w_nonzero"] = dec.has_linear_part
        diag["grid_mode"] = st.search_mode
        if st.bound is not None:
            diag["mu"] = rat_out(st.bound.mu).model_dump()
            diag["definite_point"] = _strs(st.bound.a)
    if outcome.minimize is not None:
        m = outcome.minimize
        diag["ellipsoid_iterations"] = m.ellipsoid_iterations
        diag["bisection_steps"] = m.bisection_steps
        diag["reduced_dim"] = m.reduced_dim
        diag["tau_interval"] = [rat_out(m.tau_low).model_dump(), rat_out(m.tau_high).model_dump()]
    if outcome.status == "NOT_CONVEX_EVIDENCE":
        diag["message"] = outcome.message
        diag["grid_points"] = outcome.grid_points
    return SolveResultDoc(
        status=outcome.status,
        point=vec_out(outcome.point) if outcome.point is not None else None,
        value=rat_out(outcome.value) if outcome.value is not None else None,
        radius=rat_out(outcome.radius.R) if outcome.radius is not None else None,
        ray=vec_out(outcome.ray) if outcome.ray is not None else None,
        diagnostics=diag,
    )


def run_solve(
    poly: PolynomialSource,
    constraints: Any = None,
    *,
    eps: Optional[RationalLike] = None,
    seed: Optional[int] = None,
    mode: Optional[str] = None,
    settings: Optional[Settings] = None,
) -> RunResult:
    """
    Parse, solve and shape the result document.

    Empty constraints become an EMPTY_POLYHEDRON document rather than an
    exception, so every solve exit code comes with a result file.
    """
    s = settings or load_settings()
    f, P = load_problem(poly, constraints)
    eps_q = parse_rational(eps) if eps is not None else s.eps
    digest = input_digest(f, P, eps_q)
    try:
        outcome = solve(f, P, eps_q, solve_options(s, seed=seed, mode=mode))
    except EmptyPolyhedronError as e:
        diag: Dict[str, Any] = {"input_sha256": digest, "message": str(e)}
        if e.certificate is not None:
            diag["farkas_certificate"] = _strs(e.certificate)
        return RunResult(SolveResultDoc(status="EMPTY_POLYHEDRON", diagnostics=diag), EXIT_EMPTY_POLYHEDRON)
    return RunResult(outcome_document(outcome, digest), _STATUS_EXIT[outcome.status])


def run_decompose(
    poly: PolynomialSource,
    *,
    seed: Optional[int] = None,
    mode: Optional[str] = None,
    settings: Optional[Settings] = None,
) -> RunResult:
    s = settings or load_settings()
    opts = solve_options(s, seed=seed, mode=mode)
    f = parse_polynomial(poly)
    dec = decompose(f)
    base = dict(
        U=[_strs(r) for r in dec.U],
        w=_strs(dec.w),
        kernel=[_strs(v) for v in dec.kernel_basis],
        fhat=polynomial_to_doc(dec.fhat),
        linear_only=dec.linear_only,
    )
    try:
        st = structure_with_bound(f, opts.mode, seed=opts.seed, max_tries=opts.max_tries, grid_limit=opts.grid_limit)
    except NotConvexEvidence as e:
        return RunResult(DecomposeDoc(**base, grid_mode="exhaustive", not_convex_evidence=str(e)), EXIT_NOT_CONVEX)
    if st.bound is None:
        return RunResult(DecomposeDoc(**base), EXIT_SOLVED)
    return RunResult(
        DecomposeDoc(
            **base,
            mu=to_rat_string(st.bound.mu),
            a=_strs(st.bound.a),
            quad_coeff=to_rat_string(st.bound.quad_coeff),
            grid_mode=st.search_mode,
        ),
        EXIT_SOLVED,
    )


def run_bound(
    poly: PolynomialSource,
    constraints: Any = None,
    *,
    seed: Optional[int] = None,
    mode: Optional[str] = None,
    settings: Optional[Settings] = None,
) -> RunResult:
    """B_U, B_w, B_UW and R; raises EmptyPolyhedronError and NotConvexEvidence."""
    s = settings or load_settings()
    opts = solve_options(s, seed=seed, mode=mode)
    f, P = load_problem(poly, constraints)
    st = structure_with_bound(f, opts.mode, seed=opts.seed, max_tries=opts.max_tries, grid_limit=opts.grid_limit)
    rb = radius_R(f, P, st, precision=opts.sqrt_precision)
    return RunResult(BoundDoc(B_U=rat_out(rb.B_U), B_w=rat_out(rb.B_w), B_UW=rat_out(rb.B_UW), R=rat_out(rb.R)), EXIT_SOLVED)


def run_certify(poly: PolynomialSource, constraints: Any = None) -> RunResult:
    """Unboundedness ray, or the Farkas witness proving there is none."""
    f, P = load_problem(poly, constraints)
    feas = lp_feasible_point(P)
    if feas.status != "OPTIMAL":
        raise EmptyPolyhedronError("constraints are infeasible", certificate=feas.certificate)
    dec = decompose(f)
    cert = unboundedness_ray(P, dec.U, dec.w)
    if cert is not None:
        return RunResult(CertifyDoc(status="UNBOUNDED", ray=vec_out(cert.ray)), EXIT_UNBOUNDED)
    wit = farkas_witness(P, dec.U, dec.w)
    return RunResult(CertifyDoc(status="BOUNDED", witness=WitnessDoc(lam=_strs(wit.lam), z=_strs(wit.z))), EXIT_SOLVED)


def run_check_convexity(
    poly: PolynomialSource,
    *,
    trials: int = 100,
    seed: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> RunResult:
    s = settings or load_settings()
    f = parse_polynomial(poly)
    rep = sampled_convexity_check(f, trials, s.seed if seed is None else seed)
    doc = ConvexityDoc(
        status=rep.status,
        trials=rep.trials,
        seed=rep.seed,
        point=vec_out(rep.point) if rep.point is not None else None,
    )
    return RunResult(doc, EXIT_SOLVED if rep.status == "NO_VIOLATION" else EXIT_NOT_CONVEX)
