from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence, Union

import orjson
from pydantic import ValidationError

from src.app.errors import DimensionMismatchError, PolyhedronFormatError
from src.core.rationals import parse_rational, to_rat_string
from src.linalg.vectors import RatMatrix, RatVector, Scalar, as_matrix, as_vector, dot, matrix_bit_length, sub, mat_vec
from src.schemas.io_schema import PolyhedronDoc


@dataclass(frozen=True)
class Polyhedron:
    """P = {x in R^n : A x <= b}; m = 0 is the whole space."""

    A: RatMatrix
    b: RatVector
    n: int

    def __post_init__(self) -> None:
        if len(self.A) != len(self.b):
            raise DimensionMismatchError(f"A has {len(self.A)} rows, b has {len(self.b)}")
        for i, row in enumerate(self.A):
            if len(row) != self.n:
                raise DimensionMismatchError(f"row {i} has length {len(row)}, expected {self.n}")

    @classmethod
    def from_rows(cls, A: Sequence[Sequence[Scalar]], b: Sequence[Scalar], n: Optional[int] = None) -> "Polyhedron":
        A_ = as_matrix(A)
        if n is None:
            if not A_:
                raise DimensionMismatchError("n is required when A has no rows")
            n = len(A_[0])
        return cls(A_, as_vector(b), n)

    @classmethod
    def whole_space(cls, n: int) -> "Polyhedron":
        return cls((), (), n)

    @property
    def m(self) -> int:
        return len(self.A)

    def contains(self, x: Sequence[Scalar]) -> bool:
        if len(x) != self.n:
            raise DimensionMismatchError(f"point has length {len(x)}, polyhedron lives in R^{self.n}")
        return all(dot(a, x) <= bi for a, bi in zip(self.A, self.b))

    def first_violated_row(self, x: Sequence[Scalar]) -> Optional[int]:
        for i, (a, bi) in enumerate(zip(self.A, self.b)):
            if dot(a, x) > bi:
                return i
        return None

    def pullback(self, offset: Sequence[Scalar], directions: Sequence[Sequence[Scalar]]) -> "Polyhedron":
        """{x' : A (offset + B x') <= b} with B's columns the given directions; zero rows dropped."""
        k = len(directions)
        shift = sub(self.b, mat_vec(self.A, offset)) if self.A else ()
        rows, rhs = [], []
        for a, beta in zip(self.A, shift):
            row = tuple(dot(a, d) for d in directions)
            if all(v == 0 for v in row):
                if beta < 0:
                    raise DimensionMismatchError("offset lies outside the polyhedron")
                continue
            rows.append(row)
            rhs.append(beta)
        return Polyhedron(tuple(rows), tuple(rhs), k)

    def encoding_length(self) -> int:
        """bl(A) + bl(b), at least n."""
        return max(self.n, matrix_bit_length(self.A) + matrix_bit_length([self.b]))


def parse_polyhedron(source: Union[str, bytes, Mapping[str, Any], PolyhedronDoc, None], n: int) -> Polyhedron:
    """Polyhedron from the {"A": [[...]], "b": [...]} document; None means R^n."""
    if source is None:
        return Polyhedron.whole_space(n)
    if isinstance(source, PolyhedronDoc):
        doc = source
    else:
        if isinstance(source, (str, bytes)):
            try:
                source = orjson.loads(source)
            except orjson.JSONDecodeError as e:
                raise PolyhedronFormatError(f"constraints are not valid JSON: {e}") from e
        try:
            doc = PolyhedronDoc.model_validate(source)
        except ValidationError as e:
            raise PolyhedronFormatError(str(e)) from e
    if doc.n is not None and doc.n != n:
        raise PolyhedronFormatError(f"constraints declare n={doc.n} but the polynomial has n={n}")
    try:
        A = [[parse_rational(a) for a in row] for row in doc.A]
        b = [parse_rational(v) for v in doc.b]
    except ValueError as e:
        raise PolyhedronFormatError(str(e)) from e
    if any(len(row) != n for row in A):
        raise PolyhedronFormatError(f"constraint rows must have length {n}")
    return Polyhedron(as_matrix(A), as_vector(b), n)


def polyhedron_to_doc(P: Polyhedron) -> PolyhedronDoc:
    return PolyhedronDoc(
        A=[[to_rat_string(a) for a in row] for row in P.A],
        b=[to_rat_string(v) for v in P.b],
        n=P.n,
    )
