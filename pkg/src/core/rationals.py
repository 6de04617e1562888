from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike) -> Fraction:
    """Parse "p/q", an integer string, an int or a Fraction. Raises ValueError."""
    if isinstance(value, bool):
        raise ValueError("boolean is not a rational")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"cannot parse rational from {type(value).__name__}")
    text = value.strip()
    if not text:
        raise ValueError("empty rational")
    try:
        return Fraction(text)
    except ZeroDivisionError as e:
        raise ValueError(f"zero denominator in {value!r}") from e


def int_bit_length(k: int) -> int:
    """bl of an integer; bl(0) = bl(1) = 1, sign costs one bit."""
    return max(1, abs(k).bit_length()) + (1 if k < 0 else 0)


def bit_length(q: Fraction) -> int:
    return int_bit_length(q.numerator) + int_bit_length(q.denominator)


def log2_ceil(q: Fraction) -> int:
    """An integer t with |q| <= 2**t (q != 0); cheap, from bit lengths."""
    q = abs(q)
    return q.numerator.bit_length() - q.denominator.bit_length() + 1


def to_rat_string(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def to_decimal_string(q: Fraction, digits: int = 20) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return str(d)
