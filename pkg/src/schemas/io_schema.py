from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Union

import orjson
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

RatText = Union[str, int]

SolveStatus = Literal["SOLVED", "UNBOUNDED", "NOT_CONVEX_EVIDENCE", "EMPTY_POLYHEDRON"]
CertifyStatus = Literal["UNBOUNDED", "BOUNDED"]
ConvexityStatus = Literal["NO_VIOLATION", "VIOLATION"]
SearchMode = Literal["randomized", "exhaustive"]

# -----------------------------
# Inputs
# -----------------------------

class TermDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    num: RatText
    den: RatText = "1"
    exp: List[int]

    @model_validator(mode="before")
    @classmethod
    def _accept_triples(cls, data: Any) -> Any:
        # [num, den, [exp...]] shorthand
        if isinstance(data, (list, tuple)):
            if len(data) != 3:
                raise ValueError("term triple must be [num, den, exp]")
            return {"num": data[0], "den": data[1], "exp": data[2]}
        return data

    @field_validator("num", "den")
    @classmethod
    def _integer_text(cls, v: RatText) -> str:
        if isinstance(v, bool):
            raise ValueError("boolean is not an integer")
        s = str(v).strip()
        try:
            int(s)
        except ValueError as e:
            raise ValueError(f"not a decimal integer: {v!r}") from e
        return s

    @field_validator("den")
    @classmethod
    def _positive_den(cls, v: str) -> str:
        if int(v) <= 0:
            raise ValueError("den must be positive")
        return v

    @field_validator("exp")
    @classmethod
    def _natural_exponents(cls, v: List[int]) -> List[int]:
        if any(e < 0 for e in v):
            raise ValueError("negative exponent")
        return v


class PolynomialDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=0)
    terms: List[TermDoc] = Field(default_factory=list)

    @model_validator(mode="after")
    def _exponent_lengths(self) -> "PolynomialDoc":
        for i, t in enumerate(self.terms):
            if len(t.exp) != self.n:
                raise ValueError(f"term {i}: exponent length {len(t.exp)} != n={self.n}")
        return self


class PolyhedronDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    A: List[List[RatText]] = Field(default_factory=list)
    b: List[RatText] = Field(default_factory=list)
    n: Optional[int] = Field(None, ge=0)

    @model_validator(mode="after")
    def _shape(self) -> "PolyhedronDoc":
        if len(self.A) != len(self.b):
            raise ValueError(f"A has {len(self.A)} rows but b has {len(self.b)} entries")
        widths = {len(r) for r in self.A}
        if len(widths) > 1:
            raise ValueError("rows of A have different lengths")
        if self.n is not None and widths and widths != {self.n}:
            raise ValueError("row length of A does not match n")
        return self

# -----------------------------
# Outputs
# -----------------------------

class RationalOut(BaseModel):
    rat: str
    dec: str


class SolveResultDoc(BaseModel):
    status: SolveStatus
    point: Optional[List[RationalOut]] = None
    value: Optional[RationalOut] = None
    radius: Optional[RationalOut] = None
    ray: Optional[List[RationalOut]] = None
    diagnostics: Dict[str, Any] = Field(default_factory=dict)


class DecomposeDoc(BaseModel):
    U: List[List[str]]
    w: List[str]
    kernel: List[List[str]]
    fhat: PolynomialDoc
    linear_only: bool
    mu: Optional[str] = None
    a: Optional[List[str]] = None
    quad_coeff: Optional[str] = None
    grid_mode: Optional[SearchMode] = None
    not_convex_evidence: Optional[str] = None


class BoundDoc(BaseModel):
    B_U: RationalOut
    B_w: RationalOut
    B_UW: RationalOut
    R: RationalOut


class WitnessDoc(BaseModel):
    lam: List[str] = Field(..., alias="lambda")
    z: List[str]

    model_config = ConfigDict(populate_by_name=True)


class CertifyDoc(BaseModel):
    status: CertifyStatus
    ray: Optional[List[RationalOut]] = None
    witness: Optional[WitnessDoc] = None


class ConvexityDoc(BaseModel):
    status: ConvexityStatus
    trials: int
    seed: int
    point: Optional[List[RationalOut]] = None


def render_json(doc: BaseModel) -> bytes:
    """Stable bytes: sorted keys, two-space indent, trailing newline, no nulls."""
    payload = doc.model_dump(mode="json", by_alias=True, exclude_none=True)
    return orjson.dumps(
        payload,
        option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE,
    )
