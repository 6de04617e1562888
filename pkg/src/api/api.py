from __future__ import annotations

from typing import Optional

from dotenv import load_dotenv
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response
from pydantic import BaseModel, Field

load_dotenv()

from src.app.errors import AppError, ContractViolation, EmptyPolyhedronError, NotConvexEvidence
from src.app.settings import Settings, load_settings
from src.schemas.io_schema import PolyhedronDoc, PolynomialDoc, SearchMode, render_json
from src.solver import runner

API_VERSION = "1.0.0"

app = FastAPI(
    title="Convex Polynomial Solver API",
    description="Exact minimization of convex polynomials over rational polyhedra",
    version=API_VERSION,
    docs_url="/api/docs",
    redoc_url="/api/redoc",
    openapi_url="/api/openapi.json",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Request/Response Models
class ProblemRequest(BaseModel):
    poly: PolynomialDoc = Field(..., description="Polynomial document")
    constraints: Optional[PolyhedronDoc] = Field(None, description="A x <= b (omit for R^n)")
    seed: Optional[int] = Field(None, ge=0)
    mode: Optional[SearchMode] = None


class SolveRequest(ProblemRequest):
    eps: Optional[str] = Field(None, description='Rational accuracy such as "1/1000000"')


class ConvexityRequest(BaseModel):
    poly: PolynomialDoc
    trials: int = Field(100, ge=1)
    seed: Optional[int] = Field(None, ge=0)


class HealthResponse(BaseModel):
    status: str
    version: str
    eps_default: str


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def _json(result: runner.RunResult, status_code: int = 200) -> Response:
    return Response(
        content=render_json(result.doc),
        status_code=status_code,
        media_type="application/json",
        headers={"X-Convexpoly-Exit-Code": str(result.exit_code)},
    )


def _run(fn, *args, **kwargs) -> runner.RunResult:
    """Domain errors -> HTTP: 409 empty polyhedron, 422 bad input or broken promise, 500 contract violation."""
    try:
        return fn(*args, **kwargs)
    except EmptyPolyhedronError as e:
        raise HTTPException(status_code=409, detail=str(e))
    except NotConvexEvidence as e:
        raise HTTPException(status_code=422, detail=f"not convex: {e}")
    except ContractViolation as e:
        raise HTTPException(status_code=500, detail=f"{e.module}: {e}")
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except AppError as e:
        raise HTTPException(status_code=500, detail=str(e))


# Endpoints
@app.get("/", tags=["Root"])
def root():
    return {
        "message": "Convex Polynomial Solver API",
        "version": API_VERSION,
        "docs": "/api/docs",
        "health": "/api/health",
    }


@app.get("/api/health", response_model=HealthResponse, tags=["Health"])
def health_check():
    s = get_settings()
    return HealthResponse(status="healthy", version=API_VERSION, eps_default=f"{s.eps.numerator}/{s.eps.denominator}")


@app.post("/api/v1/solve", tags=["Solve"])
def solve_endpoint(request: SolveRequest):
    """
    Minimize the polynomial over the constraints to within eps.

    The body is the same document `convexpoly solve` writes. An empty
    polyhedron answers 409 with the EMPTY_POLYHEDRON document.
    """
    result = _run(
        runner.run_solve,
        request.poly,
        request.constraints,
        eps=request.eps,
        seed=request.seed,
        mode=request.mode,
        settings=get_settings(),
    )
    status = 409 if result.exit_code == runner.EXIT_EMPTY_POLYHEDRON else 200
    return _json(result, status)


@app.post("/api/v1/decompose", tags=["Structure"])
def decompose_endpoint(request: ProblemRequest):
    return _json(_run(runner.run_decompose, request.poly, seed=request.seed, mode=request.mode, settings=get_settings()))


@app.post("/api/v1/bound", tags=["Structure"])
def bound_endpoint(request: ProblemRequest):
    return _json(
        _run(
            runner.run_bound,
            request.poly,
            request.constraints,
            seed=request.seed,
            mode=request.mode,
            settings=get_settings(),
        )
    )


@app.post("/api/v1/certify-unbounded", tags=["Structure"])
def certify_endpoint(request: ProblemRequest):
    return _json(_run(runner.run_certify, request.poly, request.constraints))


@app.post("/api/v1/check-convexity", tags=["Convexity"])
def check_convexity_endpoint(request: ConvexityRequest):
    return _json(
        _run(runner.run_check_convexity, request.poly, trials=request.trials, seed=request.seed, settings=get_settings())
    )
