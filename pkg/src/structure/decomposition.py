from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from src.app.errors import ResidualNonzeroError
from src.linalg.subspaces import inverse_image_split
from src.linalg.vectors import RatMatrix, RatVector, Scalar, dot, is_zero_vector, mat_vec, norm_sq, scale, zeros
from src.polynomial.calculus import substitute_affine
from src.polynomial.sparse import SparsePolynomial
from src.structure.gradient_matrix import build_gradient_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StructureDecomposition:
    """
    f(x) = fhat(U x) - <w, x>.

    Rows of U are pairwise orthogonal and orthogonal to w and to every kernel
    vector; fhat has one variable per row of U. `w_raw` is the direction with
    grad_{w_raw} f == -1 (zero when f has no such direction).
    """

    n: int
    U: RatMatrix
    w: RatVector
    w_raw: RatVector
    kernel_basis: Tuple[RatVector, ...]
    fhat: SparsePolynomial
    scaled_basis: Tuple[RatVector, ...]

    @property
    def k(self) -> int:
        return len(self.U)

    @property
    def linear_only(self) -> bool:
        return self.k == 0

    @property
    def has_linear_part(self) -> bool:
        return not is_zero_vector(self.w)

    def project(self, x: Sequence[Scalar]) -> RatVector:
        """U x."""
        return mat_vec(self.U, x)

    def u_columns(self) -> Tuple[RatVector, ...]:
        return tuple(tuple(row[j] for row in self.U) for j in range(self.n))

    def recompose(self) -> SparsePolynomial:
        """fhat(U x) - <w, x> expanded in x."""
        lifted = substitute_affine(self.fhat, self.u_columns(), zeros(self.k))
        return lifted - SparsePolynomial.linear(self.w)


def decompose(f: SparsePolynomial) -> StructureDecomposition:
    gm = build_gradient_matrix(f)
    split = inverse_image_split(gm.mat, scale(-1, gm.one_vector), n=f.n)

    U = split.complement_basis
    w_raw = split.w
    w = scale(1 / norm_sq(w_raw), w_raw) if split.has_solution else zeros(f.n)
    scaled = tuple(scale(1 / norm_sq(u), u) for u in U)
    fhat = substitute_affine(f, scaled, zeros(f.n))

    dec = StructureDecomposition(
        n=f.n,
        U=U,
        w=w,
        w_raw=w_raw,
        kernel_basis=split.kernel_basis,
        fhat=fhat,
        scaled_basis=scaled,
    )
    residual = f - dec.recompose()
    if not residual.is_zero():
        raise ResidualNonzeroError(
            f"f - fhat(Ux) + <w,x> has {len(residual)} nonzero terms", module="structure"
        )
    logger.info(
        "decomposition",
        extra={"ctx": {"n": f.n, "k": dec.k, "kernel_dim": len(dec.kernel_basis), "w_nonzero": dec.has_linear_part}},
    )
    return dec


def orthogonality_defects(dec: StructureDecomposition) -> int:
    """Number of nonzero inner products among U rows, w and kernel vectors."""
    vecs = list(dec.U) + list(dec.kernel_basis)
    bad = 0
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            bad += dot(vecs[i], vecs[j]) != 0
        bad += dot(vecs[i], dec.w) != 0
    return bad
