from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import List, Literal, Optional, Sequence, Tuple

from src.app.errors import DimensionMismatchError, LpIterationLimitError
from src.linalg.vectors import Scalar

logger = logging.getLogger(__name__)

LpStatus = Literal["OPTIMAL", "UNBOUNDED", "INFEASIBLE"]
BasisLogEntry = Tuple[int, Tuple[int, ...]]


@dataclass(frozen=True)
class StandardFormResult:
    """Outcome of min c.z s.t. M z = h, z >= 0."""

    status: LpStatus
    z: Optional[Tuple[Fraction, ...]] = None
    value: Optional[Fraction] = None
    duals: Optional[Tuple[Fraction, ...]] = None
    basis: Tuple[int, ...] = ()
    basis_log: Tuple[BasisLogEntry, ...] = field(default_factory=tuple)
    iterations: int = 0


class _Tableau:
    """Dense tableau over [original | artificial | rhs] with an objective row."""

    def __init__(self, M: Sequence[Sequence[Scalar]], h: Sequence[Scalar], n_vars: int) -> None:
        m = len(M)
        self.n_vars = n_vars
        self.n_cols = n_vars + m
        self.signs: List[int] = []
        self.rows: List[List[Fraction]] = []
        for i in range(m):
            sgn = -1 if h[i] < 0 else 1
            self.signs.append(sgn)
            row = [Fraction(sgn * Fraction(a)) for a in M[i]]
            row += [Fraction(int(k == i)) for k in range(m)]
            row.append(Fraction(sgn * Fraction(h[i])))
            self.rows.append(row)
        self.basis: List[int] = [n_vars + i for i in range(m)]
        self.obj: List[Fraction] = [Fraction(0)] * (self.n_cols + 1)
        self.rows_dropped = False

    def set_objective(self, cost: Sequence[Fraction]) -> None:
        # reduced costs c_j - c_B B^-1 A_j; last entry is -objective
        obj = list(cost) + [Fraction(0)]
        for i, bi in enumerate(self.basis):
            cb = cost[bi]
            if cb:
                row = self.rows[i]
                obj = [o - cb * r for o, r in zip(obj, row)]
        self.obj = obj

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        inv = 1 / prow[c]
        prow = [a * inv for a in prow]
        self.rows[r] = prow
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                self.rows[i] = [a - f * b for a, b in zip(row, prow)]
        if self.obj[c] != 0:
            f = self.obj[c]
            self.obj = [a - f * b for a, b in zip(self.obj, prow)]
        self.basis[r] = c

    def run(self, eligible: int, phase: int, log: List[BasisLogEntry], limit: int) -> Literal["OPTIMAL", "UNBOUNDED"]:
        """Bland's rule: lowest-index entering column, ratio ties broken by lowest basic index."""
        steps = 0
        while True:
            entering = next((j for j in range(eligible) if self.obj[j] < 0), None)
            if entering is None:
                return "OPTIMAL"
            leave, best = None, None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        leave, best = i, ratio
            if leave is None:
                return "UNBOUNDED"
            self.pivot(leave, entering)
            steps += 1
            log.append((phase, tuple(sorted(self.basis))))
            if steps > limit:
                raise LpIterationLimitError(f"phase {phase} exceeded {limit} pivots", module="lp-exact")
            logger.debug("pivot", extra={"ctx": {"phase": phase, "entering": entering, "step": steps}})

    def drive_out_artificials(self, log: List[BasisLogEntry]) -> None:
        keep: List[int] = []
        for i in range(len(self.rows)):
            if self.basis[i] < self.n_vars:
                keep.append(i)
                continue
            c = next((j for j in range(self.n_vars) if self.rows[i][j] != 0), None)
            if c is None:
                continue  # redundant equality
            self.pivot(i, c)
            log.append((1, tuple(sorted(self.basis))))
            keep.append(i)
        if len(keep) != len(self.rows):
            self.rows_dropped = True
            self.rows = [self.rows[i] for i in keep]
            self.basis = [self.basis[i] for i in keep]

    def solution(self) -> Tuple[Fraction, ...]:
        z = [Fraction(0)] * self.n_vars
        for i, bi in enumerate(self.basis):
            if bi < self.n_vars:
                z[bi] = self.rows[i][-1]
        return tuple(z)


def solve_standard_form(
    M: Sequence[Sequence[Scalar]],
    h: Sequence[Scalar],
    c: Optional[Sequence[Scalar]] = None,
    *,
    n_vars: Optional[int] = None,
) -> StandardFormResult:
    """
    Two-phase exact simplex for min c.z, M z = h, z >= 0.

    c = None only runs phase 1 (feasibility). Duals y (one per row of M, in
    the caller's orientation) are returned for optimal outcomes when no row
    was found redundant; they satisfy M^T y <= c with h.y equal to the optimum.
    """
    m = len(M)
    if len(h) != m:
        raise DimensionMismatchError(f"M has {m} rows, h has {len(h)}")
    N = len(M[0]) if m else (n_vars if n_vars is not None else len(c or ()))
    if any(len(r) != N for r in M):
        raise DimensionMismatchError("ragged constraint matrix")
    if c is not None and len(c) != N:
        raise DimensionMismatchError(f"cost has length {len(c)}, expected {N}")

    t = _Tableau(M, h, N)
    log: List[BasisLogEntry] = []
    limit = comb(N + m, m) if m else 1

    t.set_objective([Fraction(0)] * N + [Fraction(1)] * m)
    t.run(t.n_cols, 1, log, limit)
    if t.obj[-1] != 0:
        logger.debug("phase 1 infeasible", extra={"ctx": {"rows": m, "cols": N}})
        return StandardFormResult("INFEASIBLE", basis_log=tuple(log), iterations=len(log))
    t.drive_out_artificials(log)

    if c is None:
        return StandardFormResult(
            "OPTIMAL", z=t.solution(), value=Fraction(0), basis=tuple(t.basis),
            basis_log=tuple(log), iterations=len(log),
        )

    cost = [Fraction(v) for v in c] + [Fraction(0)] * m
    t.set_objective(cost)
    status = t.run(N, 2, log, limit)
    if status == "UNBOUNDED":
        return StandardFormResult("UNBOUNDED", basis=tuple(t.basis), basis_log=tuple(log), iterations=len(log))

    z = t.solution()
    value = sum((cost[j] * z[j] for j in range(N)), Fraction(0))
    duals = None
    if not t.rows_dropped:
        # artificial column k holds B^-1 e_k, so its reduced cost is -y_k for the flipped row k
        duals = tuple(-t.obj[N + k] * t.signs[k] for k in range(m))
    return StandardFormResult(
        "OPTIMAL", z=z, value=value, duals=duals, basis=tuple(t.basis),
        basis_log=tuple(log), iterations=len(log),
    )
