# tests/unit/test_sturm_contfrac.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction

import pytest

from signet.errors import DomainError, SingularError, UnsatisfiableError
from signet.exact.poly import Poly
from signet.forms.signature import signature
from signet.sturm.chain import sturm_chain
from signet.sturm.contfrac import (
    CFValue,
    ContinuedFraction,
    cf_eval,
    cf_expand,
    cf_matrix,
    reverse_cf,
    sturm_tri,
    tri,
    tri_minors,
)

X = Poly.x()


# Evaluation
def test_eval_two_two():
    assert cf_eval([2, 2]) == CFValue(Fraction(3, 2), Fraction(3), Fraction(2))


def test_eval_terms_are_determinants():
    chi = [3, -1, 4, 2]
    value, num, den = cf_eval(chi)
    assert num == tri_minors(chi)[-1]
    assert den == tri_minors(chi[1:])[-1]
    assert value == num / den


def test_eval_errors():
    with pytest.raises(DomainError):
        cf_eval([])
    with pytest.raises(SingularError):
        cf_eval([2, 0])


def test_cf_matrix_first_column():
    M = cf_matrix([2, 2])
    assert M == [[3, -2], [2, -1]]
    a, c = M[0][0], M[1][0]
    assert a / c == cf_eval([2, 2]).value


# Tridiagonal matrices
def test_tri_rows():
    assert tri([1, 2, 3]).rows() == [[1, 1, 0], [1, 2, 1], [0, 1, 3]]


def test_minors_and_reversal():
    assert tri_minors([2, 3, 5]) == [1, 2, 5, 23]
    assert tri_minors(reverse_cf([2, 3, 5])) == [1, 5, 14, 23]
    # mu_n / mu_{n-1} is the reversed continued fraction
    assert Fraction(23, 5) == cf_eval([5, 3, 2]).value


def test_regularity():
    assert ContinuedFraction.of([2, 2]).is_regular()
    assert not ContinuedFraction.of([1, 1]).is_regular()
    assert len(ContinuedFraction.of([4, 5, 6]).reversed()) == 3


# Expansion
def test_big_entry_expansion():
    assert cf_expand(7, 3).chi == (3, 2, 2)
    assert cf_expand(-7, 3).chi == (-3, -2, -2)
    assert cf_expand(5, 1).chi == (5,)


@pytest.mark.parametrize("a, c", [(3, 2), (1, 2), (5, 2), (-7, 4), (2, 9)])
def test_even_expansion_reconstructs(a, c):
    cf = cf_expand(a, c, mode="even")
    assert all(x % 2 == 0 for x in cf)
    assert cf_eval(cf).value == Fraction(a, c)


def test_even_three_halves():
    assert cf_expand(3, 2, mode="even").chi == (2, 2)


def test_unsatisfiable_expansions():
    with pytest.raises(UnsatisfiableError):
        cf_expand(1, 2)
    with pytest.raises(UnsatisfiableError):
        cf_expand(3, 1, mode="even")


@pytest.mark.parametrize("a, c, mode", [(2, 4, "big-entry"), (1, 0, "big-entry"), (3, 2, "odd")])
def test_malformed_expansions(a, c, mode):
    with pytest.raises(DomainError):
        cf_expand(a, c, mode=mode)


# Sylvester's tridiagonal form
@pytest.mark.parametrize("a", [-3, 3, Fraction(1, 2)])
def test_sturm_tri_signature_counts_variations(a):
    P = X**2 - 1
    chain = sturm_chain(P)
    T = sturm_tri(P).evaluate(a)
    assert signature(T).tau == chain.length - 2 * chain.variations_at(a)


def test_sturm_tri_needs_squarefree():
    with pytest.raises(DomainError):
        sturm_tri((X - 1) ** 2)


# End of tests/unit/test_sturm_contfrac.py
