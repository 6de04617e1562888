from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Mapping, Union

import orjson
from pydantic import ValidationError

from src.app.errors import PolynomialFormatError
from src.polynomial.sparse import SparsePolynomial
from src.schemas.io_schema import PolynomialDoc, TermDoc

PolynomialSource = Union[str, bytes, Mapping[str, Any], PolynomialDoc]


def parse_polynomial(source: PolynomialSource) -> SparsePolynomial:
    """
    Build a polynomial from JSON text or an already-decoded document.

    Terms may be objects {"num", "den", "exp"} or [num, den, exp] triples.
    Coefficients are reduced to lowest terms and zero terms dropped.
    """
    if isinstance(source, PolynomialDoc):
        doc = source
    else:
        if isinstance(source, (str, bytes)):
            try:
                source = orjson.loads(source)
            except orjson.JSONDecodeError as e:
                raise PolynomialFormatError(f"polynomial is not valid JSON: {e}") from e
        try:
            doc = PolynomialDoc.model_validate(source)
        except ValidationError as e:
            raise PolynomialFormatError(str(e)) from e

    terms: Dict[tuple, Fraction] = {}
    for t in doc.terms:
        alpha = tuple(t.exp)
        terms[alpha] = terms.get(alpha, Fraction(0)) + Fraction(int(t.num), int(t.den))
    return SparsePolynomial(doc.n, terms)


def polynomial_to_doc(p: SparsePolynomial) -> PolynomialDoc:
    return PolynomialDoc(
        n=p.n,
        terms=[
            TermDoc(num=str(c.numerator), den=str(c.denominator), exp=list(alpha))
            for alpha, c in p.items()
        ],
    )
