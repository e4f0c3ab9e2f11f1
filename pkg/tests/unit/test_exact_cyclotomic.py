# tests/unit/test_exact_cyclotomic.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction

import pytest

from signet.errors import DomainError, SingularError
from signet.exact.cyclotomic import CycNumber, cyc_sign, cyclotomic_polynomial, evaluate_poly
from signet.exact.poly import Poly


# Cyclotomic polynomials
def test_small_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == Poly((-1, 1))
    assert cyclotomic_polynomial(4) == Poly((1, 0, 1))
    assert cyclotomic_polynomial(6) == Poly((1, -1, 1))
    assert cyclotomic_polynomial(12) == Poly((1, 0, -1, 0, 1))


def test_bad_order():
    with pytest.raises(DomainError):
        cyclotomic_polynomial(0)


# Field arithmetic
def test_roots_of_unity_relations():
    i = CycNumber.zeta(4)
    assert i * i == -1
    assert CycNumber.zeta(3) + CycNumber.zeta(3, 2) == -1
    assert CycNumber.zeta(2) == -1


def test_mixed_conductors_embed():
    # zeta_4 * zeta_6 = zeta_12^5
    assert CycNumber.zeta(4) * CycNumber.zeta(6) == CycNumber.zeta(12, 5)


@pytest.mark.parametrize("q, k, m", [(3, 1, 12), (4, 1, 12), (5, 2, 10), (6, 1, 6), (7, 3, 21)])
def test_hash_agrees_across_conductors(q, k, m):
    x = 2 + CycNumber.zeta(q, k) - Fraction(1, 3) * CycNumber.zeta(q, 2 * k)
    y = x.embed(m)
    assert x == y
    assert hash(x) == hash(y)
    assert len({x, y}) == 1


def test_hash_separates_elements():
    xs = [n + CycNumber.zeta(7) for n in range(10)] + [n * CycNumber.zeta(8) for n in range(1, 11)]
    assert len({hash(x) for x in xs}) > 1
    assert len(set(xs)) == 20
    assert hash(CycNumber.zeta(3) + CycNumber.zeta(3, 2)) == hash(Fraction(-1))


def test_conjugation():
    assert CycNumber.zeta(5).conj() == CycNumber.zeta(5, 4)
    assert (CycNumber.zeta(5) + CycNumber.zeta(5, 4)).is_real()


def test_inverse():
    x = 1 + CycNumber.zeta(5)
    assert x * x.inverse() == 1
    assert 1 / x == x.inverse()
    with pytest.raises(SingularError):
        CycNumber(5).inverse()


def test_sqrt2_is_exact():
    r = CycNumber.zeta(8) + CycNumber.zeta(8, 7)
    assert r * r == 2
    assert evaluate_poly(Poly((-2, 0, 1)), r).is_zero()


# Sign certification
def test_signs_of_real_elements():
    r = CycNumber.zeta(8) + CycNumber.zeta(8, 7)
    assert cyc_sign(r - 1) == 1
    assert cyc_sign(r - Fraction(3, 2)) == -1
    assert cyc_sign(r - r) == 0
    assert cyc_sign(CycNumber.zeta(3) + CycNumber.zeta(3, 2)) == -1


def test_sign_of_non_real_is_rejected():
    with pytest.raises(DomainError):
        cyc_sign(CycNumber.zeta(4))


def test_sign_is_precision_independent(low_precision):
    # 2 cos(2 pi / 7) - 5/4 is about -0.003, still certified from a tiny seed.
    x = CycNumber.zeta(7) + CycNumber.zeta(7, 6) - Fraction(5, 4)
    assert cyc_sign(x) == -1


# End of tests/unit/test_exact_cyclotomic.py
