# tests/unit/test_witt_ratfunc.py
# To run these tests, use:
# poetry run pytest
import pytest

from signet.errors import DomainError, SingularError
from signet.exact.poly import Poly
from signet.exact.ratfunc import RatFunc
from signet.sturm.roots import RealAlgebraic
from signet.witt.ratfunc import ResidueClass, WittClassRX, is_square_mod, residue, witt_rx, witt_rx_sample

X = Poly.x()
RX = RatFunc(X)
ONE = Poly((1,))


# Witt classes over Q(X)
def test_class_of_x():
    c = witt_rx([[RX]])
    assert c == WittClassRX(1, ((RealAlgebraic.from_rational(0), 1),), ())
    assert not c.is_zero()


def test_non_real_factor_lands_in_h_part():
    c = witt_rx([[RatFunc(X**2 + 1)]])
    assert c.tau_inf == 1
    assert c.real_part == ()
    assert c.h_part == ((X**2 + 1, 1),)


def test_square_entries_vanish():
    assert witt_rx([[RatFunc(X**2), 0], [0, -1]]).is_zero()
    assert witt_rx([[0, 1], [1, 0]]).is_zero()


def test_jump_sign_and_position():
    c = witt_rx([[RatFunc(1 - X)]])
    assert c.tau_inf == -1
    ((root, jump),) = c.real_part
    assert jump == -1
    assert root.lo < 1 < root.hi


def test_sample():
    S = [[RatFunc(X - 1)]]
    assert witt_rx_sample(S, 3) == 1
    assert witt_rx_sample(S, 0) == -1


def test_singular_over_qx():
    with pytest.raises(SingularError):
        witt_rx([[RX, RX], [RX, RX]])


# Residues
def test_residue_of_x_is_derivative_class():
    r = residue([[RX]], X)
    assert r.entries == (ONE,)
    assert r.rank == 1
    assert not r.is_zero()


def test_residue_drops_the_prime():
    r = residue([[RatFunc(X * (X - 1))]], X)
    assert r.entries == (Poly((-1,)),)


def test_residue_away_from_divisor_is_zero():
    assert residue([[RX]], X - 2).is_zero()


def test_residue_needs_irreducible():
    with pytest.raises(DomainError):
        residue([[RX]], X**2 - 1)


def test_rational_residue_field_equality():
    a = ResidueClass(X, (ONE, ONE))
    b = ResidueClass(X, (Poly((2,)), Poly((2,))))
    assert a.witt_equal(b)
    assert not a.witt_equal(ResidueClass(X, (Poly((2,)),)))


def test_gaussian_residue_field():
    pi = X**2 + 1
    assert ResidueClass(pi, (ONE, ONE)).is_zero()
    assert not ResidueClass(pi, (ONE,)).is_zero()


def test_residue_equality_limits():
    with pytest.raises(DomainError):
        ResidueClass(X**3 - 2, ()).is_zero()
    with pytest.raises(DomainError):
        ResidueClass(X, ()).witt_equal(ResidueClass(X - 1, ()))


def test_square_test():
    assert is_square_mod(Poly((4,)), X - 1)
    assert not is_square_mod(Poly((3,)), X - 1)
    assert is_square_mod(Poly((-1,)), X**2 + 1)
    # (1 + X)^2 = 3 + 2X modulo X^2 - 2
    assert is_square_mod(Poly((3, 2)), X**2 - 2)
    assert not is_square_mod(X, X**2 - 2)


# End of tests/unit/test_witt_ratfunc.py
