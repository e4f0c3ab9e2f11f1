# tests/unit/test_cli_codec.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction

import pytest

from signet.cli import codec
from signet.errors import ParseError
from signet.exact.cyclotomic import CycNumber
from signet.exact.poly import Poly
from signet.exact.ratfunc import RatFunc
from signet.forms.matrix import EpsSymMatrix
from signet.forms.signature import signature

X = Poly.x()


# Decoding
def test_decode_numbers():
    assert codec.decode_rational("3/4") == Fraction(3, 4)
    assert codec.decode_rational(5) == 5
    assert codec.decode_int("6/3") == 2
    with pytest.raises(ParseError):
        codec.decode_rational(1.5)
    with pytest.raises(ParseError):
        codec.decode_int("1/2")


def test_decode_structures():
    assert codec.decode_poly(["-1", "0", "1"]) == X**2 - 1
    assert codec.decode_scalar({"q": 4, "rep": ["0", "1"]}) == CycNumber(4, X)
    assert codec.decode_scalar({"num": ["0", "1"]}) == RatFunc(X)
    assert codec.decode_matrix([["1", "1/2"], ["1/2", 1]]) == [[1, Fraction(1, 2)], [Fraction(1, 2), 1]]
    assert codec.decode_int_list(["1", 2, "-3"]) == [1, 2, -3]
    assert codec.decode_bool("true") is True
    assert codec.decode_bool(False) is False


@pytest.mark.parametrize(
    "decode, value",
    [
        (codec.decode_poly, "X^2"),
        (codec.decode_scalar, {"foo": 1}),
        (codec.decode_matrix, ["1", "2"]),
        (codec.decode_bool, "yes"),
        (codec.decode_int_list, "1 2"),
        (codec.decode_real_algebraic, {"minpoly": ["-2", "0", "1"]}),
    ],
)
def test_decode_errors(decode, value):
    with pytest.raises(ParseError):
        decode(value)


def test_decode_real_algebraic():
    x = codec.decode_real_algebraic({"minpoly": ["-2", "0", "1"], "interval": ["1", "2"]})
    assert x.minpoly == X**2 - 2
    assert (x.lo, x.hi) == (1, 2)


# Encoding
def test_encode_scalars():
    assert codec.encode(Fraction(1, 2)) == "1/2"
    assert codec.encode(Fraction(4)) == "4"
    assert codec.encode(X**2 - 1) == ["-1", "0", "1"]
    assert codec.encode(RatFunc(Poly((1,)), X)) == {"num": ["1"], "den": ["0", "1"]}
    assert codec.encode(CycNumber(4, X)) == {"q": 4, "rep": ["0", "1"]}
    assert codec.encode((1, None, True, "x")) == [1, None, True, "x"]


def test_encode_forms():
    out = codec.encode(EpsSymMatrix.of([[1, 0], [0, 2]]))
    assert out == {"epsilon": 1, "field": "Q", "involution": "identity", "entries": [["1", "0"], ["0", "2"]]}
    assert codec.encode(signature([[1, 0], [0, -1]])) == {"p": 1, "q": 1, "nullity": 0}


def test_encode_rejects_unknown_types():
    with pytest.raises(TypeError):
        codec.encode(object())


# Text
def test_dumps_is_canonical():
    assert codec.dumps({"b": 1, "a": [1, "x"]}) == '{"a":[1,"x"],"b":1}'


def test_loads():
    assert codec.loads('{"cmd": "lens"}') == {"cmd": "lens"}
    with pytest.raises(ParseError):
        codec.loads("{")


# End of tests/unit/test_cli_codec.py
