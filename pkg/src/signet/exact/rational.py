# src/signet/exact/rational.py
"""Rational scalars and their wire encoding.

Rationals are :class:`fractions.Fraction` values; ``Rational`` is an alias
kept for readable signatures. Text encoding is ``"p/q"`` or ``"p"``.
"""

import re
from fractions import Fraction
from typing import Union

from signet.errors import ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_fraction(value: Union[str, int, Fraction]) -> Fraction:
    """Parse a rational from ``"p/q"``, ``"p"`` or an exact number.

    :param value: Text or exact number. Floats are rejected.
    :returns: The rational value.
    :rtype: Fraction
    :raises ParseError: If the text is malformed or the denominator is 0.
    """
    if isinstance(value, bool):
        raise ParseError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError(f"cannot read a rational from {type(value).__name__}")
    m = _RATIONAL_RE.match(value)
    if m is None:
        raise ParseError(f"malformed rational {value!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError("zero denominator")
    return Fraction(int(m.group(1)), den)


def fraction_to_str(x: Fraction) -> str:
    """Encode a rational as ``"p/q"`` (or ``"p"`` when integral)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sign(x: Union[int, Fraction]) -> int:
    """Sign of an exact rational as -1, 0 or +1."""
    return (x > 0) - (x < 0)
