from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from src.app.errors import ContractViolation, WitnessInfeasibleError
from src.linalg.vectors import RatMatrix, RatVector, Scalar, add, combine, dot, is_zero_vector, mat_vec, scale, zeros
from src.lp.polyhedron import Polyhedron
from src.lp.solvers import lp_feasible_point
from src.polynomial.sparse import SparsePolynomial, evaluate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnboundedCertificate:
    """A x0 <= 0, U x0 = 0, <w, x0> = 1: f decreases by exactly t along a + t*x0."""

    ray: RatVector

    def verify(self, P: Polyhedron, U: RatMatrix, w: Sequence[Scalar]) -> bool:
        return (
            all(v <= 0 for v in mat_vec(P.A, self.ray))
            and all(v == 0 for v in mat_vec(U, self.ray))
            and dot(w, self.ray) == 1
        )


@dataclass(frozen=True)
class FarkasWitness:
    """lambda >= 0 and z with A^T lambda + U^T z = w."""

    lam: RatVector
    z: RatVector

    def residual(self, P: Polyhedron, U: RatMatrix, w: Sequence[Scalar]) -> RatVector:
        lhs = add(combine(self.lam, P.A, P.n), combine(self.z, U, P.n))
        return tuple(a - b for a, b in zip(lhs, w))

    def verify(self, P: Polyhedron, U: RatMatrix, w: Sequence[Scalar]) -> bool:
        return all(v >= 0 for v in self.lam) and is_zero_vector(self.residual(P, U, w))


def unboundedness_ray(P: Polyhedron, U: RatMatrix, w: Sequence[Scalar]) -> Optional[UnboundedCertificate]:
    """Solve {A x <= 0, U x = 0, <w, x> = 1}; present iff f is unbounded below on P."""
    if is_zero_vector(w):
        return None
    rows = [tuple(a) for a in P.A]
    rhs = [Fraction(0)] * P.m
    for u in U:
        rows += [tuple(u), scale(-1, u)]
        rhs += [Fraction(0), Fraction(0)]
    rows += [tuple(w), scale(-1, w)]
    rhs += [Fraction(1), Fraction(-1)]
    out = lp_feasible_point(Polyhedron.from_rows(rows, rhs, P.n))
    if out.status != "OPTIMAL":
        return None
    cert = UnboundedCertificate(out.point)
    if not cert.verify(P, U, w):
        raise ContractViolation("ray from the LP fails its own conditions", module="bounds")
    logger.info("unbounded ray", extra={"ctx": {"ray": [str(v) for v in cert.ray]}})
    return cert


def check_linear_decrease(
    f: SparsePolynomial,
    a: Sequence[Scalar],
    ray: Sequence[Scalar],
    steps: Iterable[int] = (1, 100, 10000),
) -> None:
    """f(a + t*ray) = f(a) - t exactly; raises ContractViolation otherwise."""
    base = evaluate(f, a)
    for t in steps:
        v = evaluate(f, add(a, scale(t, ray)))
        if v != base - t:
            raise ContractViolation(f"f(a + {t}*ray) = {v}, expected {base - t}", module="bounds")


def farkas_witness(P: Polyhedron, U: RatMatrix, w: Sequence[Scalar]) -> FarkasWitness:
    """Exact (lambda >= 0, z) with A^T lambda + U^T z = w, as an LP feasibility problem."""
    m, k, n = P.m, len(U), P.n
    if is_zero_vector(w):
        return FarkasWitness(zeros(m), zeros(k))
    nv = m + k
    if nv == 0:
        raise WitnessInfeasibleError("no constraints and no U rows, but w != 0", module="bounds")
    rows, rhs = [], []
    for i in range(m):
        rows.append(tuple(Fraction(-int(j == i)) for j in range(nv)))
        rhs.append(Fraction(0))
    for j in range(n):
        eq = tuple(P.A[i][j] for i in range(m)) + tuple(U[l][j] for l in range(k))
        rows += [eq, scale(-1, eq)]
        rhs += [Fraction(w[j]), -Fraction(w[j])]
    out = lp_feasible_point(Polyhedron.from_rows(rows, rhs, nv))
    if out.status != "OPTIMAL":
        raise WitnessInfeasibleError("A^T lambda + U^T z = w has no solution with lambda >= 0", module="bounds")
    wit = FarkasWitness(out.point[:m], out.point[m:])
    if not wit.verify(P, U, w):
        raise WitnessInfeasibleError("witness from the LP fails A^T lambda + U^T z = w", module="bounds")
    return wit
