# tests/unit/test_exact_factor.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction

import pytest

from signet.errors import DomainError, SingularError
from signet.exact.factor import factor_poly, is_irreducible, prime_factors, squarefree_core
from signet.exact.poly import Poly


def test_factor_poly_sorted_with_multiplicities():
    P = Poly.from_roots([1, 1, -2]) * 5
    assert factor_poly(P) == [(Poly((-1, 1)), 2), (Poly((2, 1)), 1)]


def test_factor_poly_irreducible_quadratic():
    P = Poly((2, 0, -1)) * Poly((1, 1))
    assert factor_poly(P) == [(Poly((1, 1)), 1), (Poly((-2, 0, 1)), 1)]


def test_factor_zero_is_rejected():
    with pytest.raises(DomainError):
        factor_poly(Poly())


def test_is_irreducible():
    assert is_irreducible(Poly((-2, 0, 1)))
    assert not is_irreducible(Poly((-1, 0, 1)))
    assert not is_irreducible(Poly((3,)))


def test_squarefree_core():
    assert squarefree_core(Fraction(8, 3)) == 6
    assert squarefree_core(-12) == -3
    assert squarefree_core(Fraction(1, 4)) == 1
    with pytest.raises(SingularError):
        squarefree_core(0)


def test_prime_factors():
    assert prime_factors(-360) == {2: 3, 3: 2, 5: 1}


# End of tests/unit/test_exact_factor.py
