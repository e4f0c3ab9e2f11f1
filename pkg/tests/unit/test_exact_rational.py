# tests/unit/test_exact_rational.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction

import pytest

from signet.errors import ParseError
from signet.exact.rational import fraction_to_str, sign, to_fraction


# Parsing
def test_to_fraction_reads_text_forms():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction("-6/8") == Fraction(-3, 4)
    assert to_fraction(" 5 ") == Fraction(5)
    assert to_fraction("+2 / 3") == Fraction(2, 3)


def test_to_fraction_passes_exact_numbers_through():
    assert to_fraction(7) == Fraction(7)
    x = Fraction(-1, 9)
    assert to_fraction(x) is x


@pytest.mark.parametrize("bad", ["1/0", "abc", "1.5", "1/-2", "", 1.5, True, None])
def test_to_fraction_rejects_malformed(bad):
    with pytest.raises(ParseError):
        to_fraction(bad)


# Encoding
def test_fraction_to_str():
    assert fraction_to_str(Fraction(6, 3)) == "2"
    assert fraction_to_str(Fraction(-1, 2)) == "-1/2"
    assert fraction_to_str(0) == "0"


def test_parse_of_encoding_is_identity():
    for x in (Fraction(0), Fraction(-7, 3), Fraction(10**30 + 1, 7)):
        assert to_fraction(fraction_to_str(x)) == x


def test_sign():
    assert sign(Fraction(-1, 3)) == -1
    assert sign(0) == 0
    assert sign(12) == 1


# End of tests/unit/test_exact_rational.py
