from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from src.app.errors import EmptyPolyhedronError, NonPositiveModulusError
from src.bounds.certificates import FarkasWitness, farkas_witness
from src.linalg.roots import DEFAULT_PRECISION, inv_norm_upper, norm_upper, sqrt_upper
from src.linalg.subspaces import kernel_basis
from src.linalg.vectors import RatVector, Scalar, as_vector, denominator_lcm, dot, is_zero_vector
from src.lp.polyhedron import Polyhedron
from src.lp.solvers import lp_feasible_point
from src.polynomial.sparse import SparsePolynomial, evaluate
from src.structure.decomposition import StructureDecomposition
from src.structure.lower_bound import QuadraticLowerBound
from src.structure.pipeline import StructureResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubspaceBound:
    """Bounds for every minimizer x*: ||U x*|| <= B_U, |<w,x*>| <= B_w, ||x*_(U+W)|| <= B_UW."""

    B_U: Fraction
    B_w: Fraction
    B_UW: Fraction


@dataclass(frozen=True)
class RadiusBound:
    B_U: Fraction
    B_w: Fraction
    B_UW: Fraction
    R: Fraction


def subspace_norm_bound(
    bound: Optional[QuadraticLowerBound],
    decomp: StructureDecomposition,
    witness: FarkasWitness,
    P: Polyhedron,
    a_feas: Sequence[Scalar],
    precision: int = DEFAULT_PRECISION,
) -> SubspaceBound:
    """
    Largest root of mu/2 t^2 - (G + Z) t + (q0 - Lambda*Bb - F) for t = ||U x*||,
    then the w-component from the witness identity and the minimizer's value.

    `bound` is None for the linear-only case, where B_U = 0 and q is the
    constant fhat.
    """
    a_feas = as_vector(a_feas)
    lam_ub = norm_upper(witness.lam, precision)
    z_ub = norm_upper(witness.z, precision)
    b_ub = norm_upper(P.b, precision)
    F = evaluate(decomp.fhat, decomp.project(a_feas)) - dot(decomp.w, a_feas)

    if bound is None:
        q0 = evaluate(decomp.fhat, ())
        G = Fraction(0)
        B_U = Fraction(0)
    else:
        if bound.mu <= 0:
            raise NonPositiveModulusError(f"mu = {bound.mu}", module="bounds")
        q0 = bound.value_at_zero()
        G = norm_upper(bound.gradient_at_zero(), precision)
        lin = G + z_ub
        disc = lin * lin + 2 * bound.mu * max(Fraction(0), F + lam_ub * b_ub - q0)
        B_U = (lin + sqrt_upper(disc, precision)) / bound.mu

    # <w,x*> <= lambda.b + <z, U x*>, and <w,x*> = fhat(U x*) - f(x*) >= q0 - G*B_U - F
    B_w = max(lam_ub * b_ub + z_ub * B_U, F - q0 + G * B_U, Fraction(0))

    B_UW = Fraction(0)
    if decomp.k:
        inv_u = max(inv_norm_upper(u, precision) for u in decomp.U)
        B_UW += sqrt_upper(decomp.k, precision) * B_U * inv_u
    if not is_zero_vector(decomp.w):
        B_UW += B_w * inv_norm_upper(decomp.w, precision)
    return SubspaceBound(B_U, B_w, B_UW)


def lifting_norm_bound(
    P: Polyhedron,
    decomp: StructureDecomposition,
    B_UW: Scalar,
    precision: int = DEFAULT_PRECISION,
) -> Fraction:
    """Norm bound for some minimizer from a Hadamard-style product over the candidate rows."""
    n = P.n
    stacked: List[RatVector] = [tuple(a) for a in P.A] + [tuple(u) for u in decomp.U]
    if not is_zero_vector(decomp.w):
        stacked.append(tuple(decomp.w))
    candidates = stacked + list(kernel_basis(stacked, n=n))

    H = Fraction(1)
    row_ub = Fraction(0)
    for r in candidates:
        ub = norm_upper(r, precision)
        row_ub = max(row_ub, ub)
        H = max(H, denominator_lcm(r) * ub)
    return sqrt_upper(n, precision) * n * H ** n * (norm_upper(P.b, precision) + Fraction(B_UW) * row_ub + 1)


def radius_R(
    f: SparsePolynomial,
    P: Polyhedron,
    structure: StructureResult,
    *,
    a_feas: Optional[Sequence[Scalar]] = None,
    precision: int = DEFAULT_PRECISION,
) -> RadiusBound:
    """Radius R such that some minimizer of f on P lies in B_R(0)."""
    if a_feas is None:
        out = lp_feasible_point(P)
        if out.status != "OPTIMAL":
            raise EmptyPolyhedronError("constraints are infeasible", certificate=out.certificate)
        a_feas = out.point
    dec = structure.decomposition
    wit = farkas_witness(P, dec.U, dec.w)
    sub = subspace_norm_bound(structure.bound, dec, wit, P, a_feas, precision)
    R = max(lifting_norm_bound(P, dec, sub.B_UW, precision), sub.B_UW)
    logger.info(
        "radius",
        extra={"ctx": {"n": f.n, "B_U": str(sub.B_U), "B_w": str(sub.B_w), "R_bits": R.numerator.bit_length()}},
    )
    return RadiusBound(sub.B_U, sub.B_w, sub.B_UW, R)
