# tests/unit/test_exact_poly.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction

import pytest

from signet.errors import DomainError, SingularError
from signet.exact.poly import Poly, poly_divmod, poly_gcd, poly_xgcd, primitive_remainder, sign_at_ints, squarefree_part
from signet.exact.rational import sign

X = Poly.x()


# Construction
def test_trailing_zeros_are_trimmed():
    P = Poly((1, 2, 0, 0))
    assert P.degree == 1
    assert Poly(()).degree == -1
    assert Poly((0,)).is_zero()


def test_string_coefficients():
    assert Poly(("1/2", "-3")) == Poly((Fraction(1, 2), -3))


def test_poly_is_immutable():
    P = Poly((1, 1))
    with pytest.raises(AttributeError):
        P.coeffs = ()


def test_from_roots():
    assert Poly.from_roots([1, -2]) == Poly((-2, 1, 1))


# Arithmetic
def test_ring_operations():
    assert (X + 1) * (X - 1) == Poly((-1, 0, 1))
    assert (X + 1) ** 3 == Poly((1, 3, 3, 1))
    assert 2 - X == Poly((2, -1))
    assert (X * 3) / 3 == X


def test_negative_power_is_rejected():
    with pytest.raises(DomainError):
        X ** -1


def test_divmod():
    P = Poly((1, 0, 0, 1))  # X^3 + 1
    q, r = poly_divmod(P, Poly((-1, 1)))
    assert q == Poly((1, 1, 1))
    assert r == Poly((2,))
    assert q * Poly((-1, 1)) + r == P


def test_divmod_by_zero():
    with pytest.raises(SingularError):
        poly_divmod(X, Poly())


def test_gcd_is_monic():
    P = Poly.from_roots([1, 2]) * 3
    Q = Poly.from_roots([2, 5]) * -2
    assert poly_gcd(P, Q) == Poly((-2, 1))


def test_xgcd_bezout_identity():
    P = Poly((-1, 0, 0, 1))
    Q = Poly((1, 0, 1))
    g, s, t = poly_xgcd(P, Q)
    assert g == Poly((1,))
    assert s * P + t * Q == g


def test_squarefree_part():
    P = Poly.from_roots([1, 1, -2]) * 4
    assert squarefree_part(P) == Poly.from_roots([1, -2])


@pytest.mark.parametrize(
    "P, Q",
    [
        (X**3 + 2 * X + 5, Poly((1, 1, -3))),
        (X**2 + 3, Poly((1, 1, -2))),
        (X**4 - X + 7, Poly((1, -2))),
        (Poly(("1/2", 0, "3/4")), Poly(("-1/3", "-5/2"))),
    ],
)
def test_primitive_remainder_is_positive_multiple(P, Q):
    exact = poly_divmod(P, Q)[1]
    assert primitive_remainder(P, Q) == Poly(exact.primitive_ints())


def test_primitive_remainder_by_zero():
    with pytest.raises(SingularError):
        primitive_remainder(X, Poly())


@pytest.mark.parametrize("x", ["3/2", "7/5", "-1/2", "0", "5", "-7/3"])
def test_sign_at_ints_matches_evaluation(x):
    P = Poly((-2, 0, 1, "1/3"))
    x = Fraction(x)
    assert sign_at_ints(P.primitive_ints(), x) == sign(P.evaluate(x))


def test_gcd_of_high_degree_products():
    A = X**3 - 2
    assert poly_gcd(A * (X**20 + 7), A * (X**21 + 5) * 3) == A


def test_squarefree_part_high_degree():
    P = (X**3 - 2) ** 2 * (X**20 + 7) * 5
    assert squarefree_part(P) == (X**3 - 2) * (X**20 + 7)


def test_gcd_with_zero_is_the_other_argument():
    assert poly_gcd(Poly(), 2 * X - 4) == Poly((-2, 1))


# Calculus and evaluation
def test_derivative_and_evaluate():
    P = Poly((1, -3, 1))
    assert P.derivative() == Poly((-3, 2))
    assert P.evaluate(Fraction(1, 2)) == Fraction(-1, 4)
    assert P(2) == -1


def test_compose():
    P = Poly((0, 0, 1))
    assert P.compose(X + 1) == Poly((1, 2, 1))


def test_reversed():
    assert Poly((1, 2, 3)).reversed() == Poly((3, 2, 1))


def test_primitive_and_content():
    P = Poly(("1/2", "1/3"))
    assert P.primitive_ints() == (3, 2)
    assert P.content() == Fraction(1, 6)
    assert P.content() * P.primitive_part() == P


def test_str():
    assert str(Poly((1, -3, 1))) == "X^2 - 3*X + 1"
    assert str(Poly(())) == "0"


# End of tests/unit/test_exact_poly.py
