from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from src.app.errors import DimensionMismatchError
from src.core.rationals import bit_length

Exponent = Tuple[int, ...]
Scalar = Union[Fraction, int]


class SparsePolynomial:
    """
    Rational multivariate polynomial stored as {exponent tuple: coefficient}.

    Instances are immutable: every operation returns a new polynomial, and the
    term map never holds a zero coefficient. deg(0) is 0.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Exponent, Scalar] | Iterable[Tuple[Exponent, Scalar]] = ()) -> None:
        if n < 0:
            raise DimensionMismatchError(f"variable count must be >= 0, got {n}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Exponent, Fraction] = {}
        for alpha, c in items:
            alpha = tuple(int(e) for e in alpha)
            if len(alpha) != n:
                raise DimensionMismatchError(f"exponent {alpha} has length {len(alpha)}, expected {n}")
            if any(e < 0 for e in alpha):
                raise DimensionMismatchError(f"negative exponent in {alpha}")
            acc[alpha] = acc.get(alpha, Fraction(0)) + Fraction(c)
        self.n = n
        self._terms: Dict[Exponent, Fraction] = {a: c for a, c in acc.items() if c != 0}

    @classmethod
    def _raw(cls, n: int, terms: Dict[Exponent, Fraction]) -> "SparsePolynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        return p

    # -----------------------------
    # Constructors
    # -----------------------------

    @classmethod
    def zero(cls, n: int) -> "SparsePolynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "SparsePolynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "SparsePolynomial":
        if not 0 <= i < n:
            raise DimensionMismatchError(f"variable index {i} out of range for n={n}")
        alpha = tuple(1 if j == i else 0 for j in range(n))
        return cls._raw(n, {alpha: Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence[Scalar], const: Scalar = 0) -> "SparsePolynomial":
        n = len(coeffs)
        p = cls.constant(n, const)
        for i, c in enumerate(coeffs):
            p = p + cls.variable(n, i) * c
        return p

    # -----------------------------
    # Inspection
    # -----------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def degree(self) -> int:
        return max((sum(a) for a in self._terms), default=0)

    def support(self) -> Tuple[Exponent, ...]:
        return tuple(sorted(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(a) == 0 for a in self._terms)

    def coefficient(self, alpha: Exponent) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.n)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparsePolynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"SparsePolynomial(n={self.n}, 0)"
        parts = []
        for alpha, c in self.items():
            mono = "*".join(
                f"x{j + 1}" if e == 1 else f"x{j + 1}^{e}" for j, e in enumerate(alpha) if e
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return f"SparsePolynomial(n={self.n}, {' + '.join(parts)})"

    # -----------------------------
    # Ring operations
    # -----------------------------

    def _coerce(self, other: object) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            if other.n != self.n:
                raise DimensionMismatchError(f"arity mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePolynomial.constant(self.n, other)
        raise TypeError(f"cannot combine SparsePolynomial with {type(other).__name__}")

    def __add__(self, other: object) -> "SparsePolynomial":
        o = self._coerce(other)
        out = dict(self._terms)
        for a, c in o._terms.items():
            s = out.get(a, 0) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return SparsePolynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial._raw(self.n, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other: object) -> "SparsePolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "SparsePolynomial":
        return self._coerce(other) - self

    def scale(self, c: Scalar) -> "SparsePolynomial":
        c = Fraction(c)
        if c == 0:
            return SparsePolynomial.zero(self.n)
        return SparsePolynomial._raw(self.n, {a: v * c for a, v in self._terms.items()})

    def __mul__(self, other: object) -> "SparsePolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        out: Dict[Exponent, Fraction] = {}
        for a, c in self._terms.items():
            for b, d in o._terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                out[k] = out.get(k, 0) + c * d
        return SparsePolynomial._raw(self.n, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "SparsePolynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("only natural powers are supported")
        result = SparsePolynomial.constant(self.n, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


def evaluate(p: SparsePolynomial, x: Sequence[Scalar]) -> Fraction:
    """Exact value of p at x."""
    if len(x) != p.n:
        raise DimensionMismatchError(f"point has length {len(x)}, polynomial has n={p.n}")
    powers = [[Fraction(1)] for _ in range(p.n)]
    total = Fraction(0)
    for alpha, c in p._terms.items():
        t = c
        for j, e in enumerate(alpha):
            if e:
                pw = powers[j]
                while len(pw) <= e:
                    pw.append(pw[-1] * x[j])
                t = t * pw[e]
        total += t
    return total


def encoding_length(p: SparsePolynomial) -> int:
    """<p> = n + deg(p) + sum of coefficient bit lengths."""
    return p.n + p.degree + sum(bit_length(c) for c in p._terms.values())
