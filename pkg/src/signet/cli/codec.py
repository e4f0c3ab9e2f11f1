# src/signet/cli/codec.py
"""JSON wire encoding.

Every number crosses the wire as a string so nothing is lost to floats:

- rational: ``"p/q"`` or ``"p"``
- polynomial: array of rationals, constant term first
- rational function: ``{"num": poly, "den": poly}``
- cyclotomic number: ``{"q": int, "rep": poly}``
- real algebraic number: ``{"minpoly": [...], "interval": [lo, hi]}``
- matrix: array of rows of scalars

Output is canonical (sorted keys, no whitespace), so equal values give equal
bytes.
"""

import dataclasses
import json
from fractions import Fraction
from typing import Any, List, Mapping

from signet.errors import ParseError
from signet.exact.cyclotomic import CycNumber
from signet.exact.poly import Poly
from signet.exact.ratfunc import RatFunc
from signet.exact.rational import fraction_to_str, to_fraction
from signet.forms.matrix import EpsSymMatrix, field_of, involution_of
from signet.sturm.roots import RealAlgebraic


# -------------------- decoding --------------------
def decode_rational(value) -> Fraction:
    if isinstance(value, float):
        raise ParseError("floats are not accepted; send rationals as strings")
    return to_fraction(value)


def decode_int(value) -> int:
    x = decode_rational(value)
    if x.denominator != 1:
        raise ParseError(f"expected an integer, got {fraction_to_str(x)}")
    return int(x)


def decode_poly(value) -> Poly:
    if not isinstance(value, list):
        raise ParseError("a polynomial is an array of rationals, constant term first")
    return Poly([decode_rational(c) for c in value])


def decode_scalar(value):
    """Rational, ``{"q", "rep"}`` cyclotomic or ``{"num", "den"}`` rational function."""
    if isinstance(value, Mapping):
        if set(value) == {"q", "rep"}:
            return CycNumber(decode_int(value["q"]), decode_poly(value["rep"]))
        if set(value) <= {"num", "den"} and "num" in value:
            return RatFunc(decode_poly(value["num"]), decode_poly(value.get("den", ["1"])))
        raise ParseError(f"unknown scalar object with keys {sorted(value)}")
    return decode_rational(value)


def decode_matrix(value) -> List[List[object]]:
    if not isinstance(value, list) or any(not isinstance(r, list) for r in value):
        raise ParseError("a matrix is an array of rows")
    return [[decode_scalar(x) for x in row] for row in value]


def decode_bool(value) -> bool:
    if isinstance(value, bool):
        return value
    if value in ("true", "false"):
        return value == "true"
    raise ParseError(f"expected a boolean, got {value!r}")


def decode_int_list(value) -> List[int]:
    if not isinstance(value, list):
        raise ParseError("expected an array of integers")
    return [decode_int(x) for x in value]


def decode_real_algebraic(value) -> RealAlgebraic:
    try:
        lo, hi = value["interval"]
        return RealAlgebraic(decode_poly(value["minpoly"]), decode_rational(lo), decode_rational(hi))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError("a real algebraic number is {minpoly, interval}") from None


# -------------------- encoding --------------------
def _poly(P: Poly) -> List[str]:
    return [fraction_to_str(c) for c in P.coeffs]


def encode(value) -> Any:
    """Plain JSON structure for a result value."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return fraction_to_str(value)
    if isinstance(value, Poly):
        return _poly(value)
    if isinstance(value, RatFunc):
        return {"num": _poly(value.num), "den": _poly(value.den)}
    if isinstance(value, CycNumber):
        return {"q": value.q, "rep": _poly(value.rep)}
    if isinstance(value, RealAlgebraic):
        return value.as_dict()
    if isinstance(value, EpsSymMatrix):
        rows = value.rows()
        return {
            "epsilon": value.epsilon,
            "field": field_of(rows),
            "involution": involution_of(rows),
            "entries": encode(rows),
        }
    as_dict = getattr(value, "as_dict", None)
    if callable(as_dict):
        return encode(as_dict())
    if dataclasses.is_dataclass(value):
        return {f.name: encode(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if hasattr(value, "_asdict"):
        return {k: encode(v) for k, v in value._asdict().items()}
    if isinstance(value, Mapping):
        return {str(encode(k)) if not isinstance(k, str) else k: encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def dumps(obj) -> str:
    """Canonical JSON text."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def loads(text: str):
    """Parse JSON text.

    :raises ParseError: On malformed JSON.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed json: {exc.msg}") from None
