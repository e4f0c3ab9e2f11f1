# tests/unit/test_knots_signature.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction

import pytest

from signet.errors import DomainError, SingularError
from signet.exact.poly import Poly
from signet.knots.braid import mirror, parse_braid
from signet.knots.seifert import knot_signature
from signet.knots.signature import (
    circle_roots,
    compact_form,
    milnor_signatures,
    omega_signature,
    sample_angle,
    signature_function,
)
from signet.sturm.roots import RealAlgebraic, ra_compare

X = Poly.x()


# Omega signatures
def test_trefoil_at_minus_one_is_the_signature(trefoil):
    assert omega_signature(trefoil, 1, 2) == knot_signature(trefoil) == -2
    assert omega_signature(trefoil, 1, 3) == -2
    assert omega_signature(trefoil, 1, 7) == 0


def test_omega_at_alexander_root(trefoil):
    with pytest.raises(SingularError):
        omega_signature(trefoil, 1, 6)


@pytest.mark.parametrize("a, q", [(0, 5), (2, 4), (1, 1), (5, 5)])
def test_omega_rejects_bad_roots(trefoil, a, q):
    with pytest.raises(DomainError):
        omega_signature(trefoil, a, q)


def test_mirror_negates_omega_signatures(figure_eight, trefoil):
    for a, q in [(1, 3), (2, 5), (3, 7)]:
        assert omega_signature(mirror(trefoil), a, q) == -omega_signature(trefoil, a, q)
        assert omega_signature(figure_eight, a, q) == 0


# Roots on the circle
def test_compact_form():
    assert compact_form(Poly((1, -3, 1))) == X - 3
    assert compact_form(Poly((1, 0, 0, 0, 1))) == X**2 - 2
    with pytest.raises(DomainError):
        compact_form(Poly((1, 1)))
    with pytest.raises(DomainError):
        compact_form(Poly((1, 2, 3)))


def test_circle_roots():
    (r,) = circle_roots(Poly((1, -1, 1)))
    assert ra_compare(r, RealAlgebraic.from_rational(1)) == 0
    assert circle_roots(Poly((1, -3, 1))) == []
    assert circle_roots(Poly((-1, 1))) == []


def test_circle_roots_sorted_by_angle():
    roots = circle_roots(Poly((1, 1, 1, 1, 1)))
    assert len(roots) == 2
    assert ra_compare(roots[0], roots[1]) == 1


def test_circle_roots_of_zero():
    with pytest.raises(SingularError):
        circle_roots(Poly(()))


def test_sample_angle():
    assert sample_angle(Fraction(1), Fraction(2)) == (1, 7)
    assert sample_angle(Fraction(-2), Fraction(2)) == (1, 3)
    assert sample_angle(Fraction(1), Fraction(1)) is None
    assert sample_angle(Fraction(1), Fraction(2), max_conductor=6) is None


# Signature functions
def test_trefoil_signature_function(trefoil):
    sf = signature_function(trefoil)
    assert sf.plateaus == (0, -2)
    assert sf.samples == ((1, 7), (1, 3))
    (b,) = sf.breakpoints
    assert ra_compare(b, RealAlgebraic.from_rational(1)) == 0
    assert sf.jumps() == [-2]
    ((_, half),) = milnor_signatures(sf)
    assert half == -1


def test_figure_eight_is_flat(figure_eight):
    sf = signature_function(figure_eight)
    assert sf.breakpoints == ()
    assert sf.plateaus == (0,)


def test_threads_give_the_same_function():
    b = parse_braid("2: 1 1 1 1 1")
    one, many = signature_function(b), signature_function(b, jobs=3)
    assert one.plateaus == many.plateaus
    assert one.samples == many.samples
    assert one.plateaus[-1] == knot_signature(b) == -4


def test_as_dict(trefoil):
    d = signature_function(trefoil).as_dict()
    assert d["plateaus"] == [0, -2]
    assert d["samples"] == [[1, 7], [1, 3]]
    assert len(d["breakpoints"]) == 1


# End of tests/unit/test_knots_signature.py
