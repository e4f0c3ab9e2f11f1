# tests/unit/test_forms_lpoly.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction
from math import comb

import pytest

from signet.errors import DomainError
from signet.forms.lpoly import MAX_K, l_genus_check, l_polynomial


def test_first_four_l_polynomials():
    L1, L2, L3, L4 = (l_polynomial(k) for k in range(1, 5))
    assert L1.coefficient(p1=1) == Fraction(1, 3)
    assert L2.coefficient(p2=1) == Fraction(7, 45)
    assert L2.coefficient(p1=2) == Fraction(-1, 45)
    assert L3.coefficient(p3=1) == Fraction(62, 945)
    assert L3.coefficient(p1=1, p2=1) == Fraction(-13, 945)
    assert L3.coefficient(p1=3) == Fraction(2, 945)
    assert L4.coefficient(p4=1) == Fraction(381, 14175)
    assert L4.coefficient(p1=1, p3=1) == Fraction(-71, 14175)
    assert L4.coefficient(p2=2) == Fraction(-19, 14175)
    assert L4.coefficient(p1=2, p2=1) == Fraction(22, 14175)
    assert L4.coefficient(p1=4) == Fraction(-3, 14175)


def test_l4_has_exactly_five_terms():
    assert len(l_polynomial(4).as_dict()) == 5


@pytest.mark.parametrize("k", range(1, 7))
def test_projective_spaces_have_signature_one(k):
    # CP^{2k}: total Pontrjagin class (1 + h^2)^{2k+1}
    ps = [comb(2 * k + 1, j) for j in range(1, k + 1)]
    assert l_genus_check(k, ps) == 1


def test_str():
    assert str(l_polynomial(1)) == "1/3*p1"


def test_errors():
    with pytest.raises(DomainError):
        l_polynomial(0)
    with pytest.raises(DomainError):
        l_polynomial(MAX_K + 1)
    with pytest.raises(DomainError):
        l_polynomial(2).coefficient(q1=1)
    with pytest.raises(DomainError):
        l_polynomial(2).coefficient(p3=1)
    with pytest.raises(DomainError):
        l_polynomial(2).evaluate([1])


# End of tests/unit/test_forms_lpoly.py
