"""Exact rational arithmetic.

Every payoff, probability and game value in this package is a
:class:`fractions.Fraction`.  This module adds the strict text grammar used
for I/O and a couple of small helpers on top of it.
"""
from __future__ import annotations

import operator
import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]

_TOKEN = re.compile(
    r"""
    \A(?P<sign>[+-]?)
    (?:
        (?P<num>\d+)(?:/(?P<den>\d+))?
      | (?P<int>\d+)\.(?P<frac>\d+)
    )\Z
    """,
    re.VERBOSE,
)

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


class RationalParseError(ValueError):
    """Raised when a token does not follow the rational grammar."""


def rat_parse(text: str) -> Fraction:
    """Parse ``"a"``, ``"a/b"`` or a finite decimal ``"a.b"`` exactly.

    An optional leading sign is allowed.  Decimals never pass through binary
    floating point, so ``"0.1"`` is exactly ``1/10``.
    """
    if not isinstance(text, str):
        raise RationalParseError(f"expected a string, got {type(text).__name__}")
    m = _TOKEN.match(text.strip())
    if m is None:
        raise RationalParseError(f"invalid rational {text!r}")
    sign = -1 if m.group("sign") == "-" else 1
    if m.group("num") is not None:
        den = int(m.group("den")) if m.group("den") is not None else 1
        if den == 0:
            raise RationalParseError(f"zero denominator in {text!r}")
        return Fraction(sign * int(m.group("num")), den)
    digits = m.group("frac")
    return Fraction(sign * int(m.group("int") + digits), 10 ** len(digits))


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, fractions and rational strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not payoffs")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_parse(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(
        f"cannot use {type(value).__name__} as an exact rational; "
        "pass an int, Fraction or string such as '0.1' or '1/3'"
    )


def rat_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}")
    a, b = to_rational(a), to_rational(b)
    if op == "div" and b == 0:
        raise ZeroDivisionError("rational division by zero")
    return fn(a, b)


def rat_cmp(a: RationalLike, b: RationalLike) -> int:
    """Three-way comparison by cross-multiplication: -1, 0 or 1."""
    a, b = to_rational(a), to_rational(b)
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def to_string(r: Fraction) -> str:
    """Canonical form, e.g. ``"-3/2"`` or ``"7"``."""
    return str(to_rational(r))
