# tests/unit/test_witt_rational.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction

import pytest

from signet.errors import DomainError, SingularError
from signet.forms.linalg import identity
from signet.witt.finite import WittClassFp, legendre, witt_fp
from signet.witt.rational import WittClassQ, witt_class_of_diagonal, witt_q


# Prime fields
def test_legendre():
    assert legendre(2, 7) == 1
    assert legendre(3, 7) == -1
    assert legendre(-1, 5) == 1


def test_witt_fp_values():
    assert witt_fp([1, 1], 3) == WittClassFp(3, 0, False, 2)
    assert witt_fp([1, -1], 3).is_zero()
    assert witt_fp([1, 1, 1, 1], 3).is_zero()
    # -1 is a square mod 5, so <1, 1> is hyperbolic there
    assert witt_fp([1, 1], 5).is_zero()
    assert witt_fp([1], 5).z4_value is None


def test_witt_fp_group_law():
    assert witt_fp([1], 7) + witt_fp([3], 7) == witt_fp([1, 3], 7)
    assert -witt_fp([1], 7) == witt_fp([-1], 7)
    assert (witt_fp([2, 3], 11) - witt_fp([2, 3], 11)).is_zero()


@pytest.mark.parametrize("diag, p", [([1], 9), ([3], 3), ([1], 2)])
def test_witt_fp_rejects(diag, p):
    with pytest.raises(DomainError):
        witt_fp(diag, p)


def test_witt_fp_mixed_primes():
    with pytest.raises(DomainError):
        witt_fp([1], 3) + witt_fp([1], 5)


# Rationals
def test_hyperbolic_plane_is_zero():
    assert witt_q([[1, 0], [0, -1]]).is_zero()
    assert witt_q([[0, 1], [1, 0]]).is_zero()


def test_single_entries():
    assert witt_q([[2]]) == WittClassQ(1, 1, 1, ())
    assert witt_q([[3]]) == WittClassQ(1, 1, 0, ((3, WittClassFp(3, 1, True, 1)),))
    assert witt_class_of_diagonal([Fraction(1, 3)]) == witt_q([[3]])


def test_e8_matches_identity(e8):
    assert witt_q(e8) == witt_q(identity(8))
    assert witt_q(e8).signature == 8


def test_generator_relation_preserves_class():
    assert witt_q([[3, 0], [0, 5]]) == witt_q([[8, 0], [0, Fraction(15, 8)]])


def test_group_law():
    assert (witt_q([[2]]) + witt_q([[-2]])).is_zero()
    assert -witt_q([[3]]) == witt_q([[-3]])
    assert (witt_q([[6, 1], [1, 7]]) - witt_q([[6, 1], [1, 7]])).is_zero()


def test_singular_form():
    with pytest.raises(SingularError):
        witt_q([[1, 1], [1, 1]])


# End of tests/unit/test_witt_rational.py
