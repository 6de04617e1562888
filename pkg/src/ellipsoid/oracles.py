from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Protocol, Sequence

from src.app.errors import OracleContractError
from src.linalg.vectors import RatVector, Scalar, as_vector, is_zero_vector, norm_sq
from src.lp.polyhedron import Polyhedron
from src.polynomial.calculus import gradient_polynomials
from src.polynomial.sparse import SparsePolynomial, evaluate

AnswerKind = Literal["INSIDE", "SEPARATED", "INFEASIBLE_EVERYWHERE"]


@dataclass(frozen=True)
class Cut:
    """Normal c with <c, x> < <c, query> for every x in the target set."""

    normal: RatVector

    def __post_init__(self) -> None:
        if is_zero_vector(self.normal):
            raise OracleContractError("zero cut normal", module="ellipsoid")


@dataclass(frozen=True)
class OracleAnswer:
    kind: AnswerKind
    cut: Optional[Cut] = None

    @classmethod
    def inside(cls) -> "OracleAnswer":
        return cls("INSIDE")

    @classmethod
    def separated(cls, normal: Sequence[Scalar]) -> "OracleAnswer":
        return cls("SEPARATED", Cut(as_vector(normal)))

    @classmethod
    def infeasible_everywhere(cls) -> "OracleAnswer":
        return cls("INFEASIBLE_EVERYWHERE")


class SeparationOracle(Protocol):
    def query(self, y: Sequence[Fraction]) -> OracleAnswer: ...


class PolyhedronOracle:
    def __init__(self, P: Polyhedron) -> None:
        self.P = P

    def query(self, y: Sequence[Fraction]) -> OracleAnswer:
        i = self.P.first_violated_row(y)
        if i is None:
            return OracleAnswer.inside()
        return OracleAnswer.separated(self.P.A[i])


class BallOracle:
    def __init__(self, R: Scalar) -> None:
        R = Fraction(R)
        if R <= 0:
            raise ValueError("ball radius must be positive")
        self.R_sq = R * R

    def query(self, y: Sequence[Fraction]) -> OracleAnswer:
        if norm_sq(y) <= self.R_sq:
            return OracleAnswer.inside()
        return OracleAnswer.separated(y)


class SublevelOracle:
    """{x : f(x) <= tau} for convex f; the gradient separates points above the level."""

    def __init__(self, f: SparsePolynomial, tau: Scalar) -> None:
        self.f = f
        self.tau = Fraction(tau)
        self._grad = gradient_polynomials(f)

    def query(self, y: Sequence[Fraction]) -> OracleAnswer:
        if evaluate(self.f, y) <= self.tau:
            return OracleAnswer.inside()
        g = tuple(evaluate(p, y) for p in self._grad)
        if is_zero_vector(g):
            return OracleAnswer.infeasible_everywhere()
        return OracleAnswer.separated(g)


class IntersectionOracle:
    """Sub-oracles are asked in order; the first non-INSIDE answer wins."""

    def __init__(self, *oracles: SeparationOracle) -> None:
        self.oracles = oracles

    def query(self, y: Sequence[Fraction]) -> OracleAnswer:
        for o in self.oracles:
            ans = o.query(y)
            if ans.kind != "INSIDE":
                return ans
        return OracleAnswer.inside()


def oracle_polyhedron(P: Polyhedron) -> PolyhedronOracle:
    return PolyhedronOracle(P)


def oracle_ball(R: Scalar) -> BallOracle:
    return BallOracle(R)


def oracle_sublevel(f: SparsePolynomial, tau: Scalar) -> SublevelOracle:
    return SublevelOracle(f, tau)
