"""Exact rational scalars.

The scalar field is GMP's ``mpq`` (via gmpy2): arbitrary-precision, always in
lowest terms with a positive denominator, and several times faster than
:class:`fractions.Fraction` on the eliminations this package runs. Fractions
and ints are accepted anywhere a scalar is expected and compare equal to the
corresponding ``mpq``. This module also owns the strict text grammar used by
every file format, ``-?[0-9]+(/[1-9][0-9]*)?``.
"""
from __future__ import annotations

import numbers
import operator
import re

from gmpy2 import mpq

Rational = mpq

_RATIONAL_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")
_ZERO_DEN_RE = re.compile(r"-?[0-9]+/0+")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


class RationalParseError(ValueError):
    """Malformed rational literal; ``position`` is the 0-based offending column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def rational_arith(a, b, op: str) -> Rational:
    """Apply ``op`` (one of add, sub, mul, div) exactly.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}") from None
    return fn(to_rational(a), to_rational(b))


def parse_rational(text: str) -> Rational:
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        # locate the first character that breaks the grammar
        if _ZERO_DEN_RE.fullmatch(text):
            raise RationalParseError("zero denominator", text.index("/") + 1)
        raise RationalParseError(f"malformed rational {text!r}", _error_position(text))
    return mpq(text)


def _error_position(text: str) -> int:
    # index of the first character that cannot extend a valid prefix
    i = 1 if text.startswith("-") else 0
    start = i
    while i < len(text) and text[i].isdigit() and text[i].isascii():
        i += 1
    if i == start or i == len(text) or text[i] != "/":
        return i
    i += 1
    if i < len(text) and text[i] in "123456789":
        i += 1
        while i < len(text) and text[i].isdigit() and text[i].isascii():
            i += 1
    return i


def format_rational(r) -> str:
    r = to_rational(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def to_rational(value) -> Rational:
    """Coerce ints, Fractions and grammar strings; floats are refused."""
    if type(value) is mpq:
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, numbers.Rational):
        return mpq(value)
    raise TypeError(f"cannot use {type(value).__name__} {value!r} as an exact rational")
