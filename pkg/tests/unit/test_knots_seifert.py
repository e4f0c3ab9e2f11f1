# tests/unit/test_knots_seifert.py
# To run these tests, use:
# poetry run pytest
import pytest

from signet.errors import DomainError, NotSymplecticError, ParseError, ShapeError, SingularError
from signet.exact.poly import Poly
from signet.forms.linalg import identity
from signet.knots.braid import BraidWord, closure_components, mirror, parse_braid, permutation, stabilize
from signet.knots.seifert import (
    SeifertMatrix,
    alexander,
    fibred_seifert,
    is_unimodular,
    knot_signature,
    normalize_alexander,
    s_equiv_enlarge,
    seifert_matrix,
)

THETA = [[0, 1], [-1, 0]]
TREFOIL_MONODROMY = [[0, -1], [1, 1]]


# Braid words
def test_parse_and_print(trefoil):
    assert trefoil.strands == 2
    assert trefoil.letters == ((1, 1), (1, 1), (1, 1))
    assert str(parse_braid("3:1 -2  1 -2")) == "3: 1 -2 1 -2"
    assert BraidWord.of(3, [1, -2]).word() == [1, -2]


@pytest.mark.parametrize("text", ["x", "2: 1 a", "2: 0", "two: 1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_braid(text)


def test_domain_errors():
    with pytest.raises(DomainError):
        parse_braid("2: 2")
    with pytest.raises(DomainError):
        BraidWord(1)
    with pytest.raises(DomainError):
        BraidWord.of(3, [1, 0])


def test_permutation_and_components(trefoil):
    assert permutation(trefoil) == [1, 0]
    assert closure_components(trefoil) == 1
    assert closure_components(parse_braid("2: 1 1")) == 2
    assert closure_components(parse_braid("3: 1 2")) == 1
    assert closure_components(BraidWord(3)) == 3


def test_mirror_and_stabilize(trefoil):
    assert mirror(trefoil).word() == [-1, -1, -1]
    s = stabilize(trefoil)
    assert s.strands == 3
    assert s.word() == [1, 1, 1, 2]


# Seifert matrices
def test_trefoil(trefoil):
    s = seifert_matrix(trefoil)
    assert s.rows() == [[-1, 1], [0, -1]]
    assert s.intersection_form() == THETA
    assert knot_signature(s) == -2
    assert alexander(s) == Poly((1, -1, 1))
    assert is_unimodular(s)


def test_figure_eight(figure_eight):
    s = seifert_matrix(figure_eight)
    assert s.rows() == [[-1, 1], [0, 1]]
    assert knot_signature(s) == 0
    assert alexander(figure_eight) == Poly((1, -3, 1))


def test_mirror_negates_signature(trefoil):
    assert knot_signature(mirror(trefoil)) == 2
    assert alexander(mirror(trefoil)) == alexander(trefoil)


def test_stabilization_preserves_invariants(trefoil):
    s = stabilize(trefoil)
    assert knot_signature(s) == knot_signature(trefoil)
    assert alexander(s) == alexander(trefoil)


def test_hopf_link():
    s = seifert_matrix(parse_braid("2: 1 1"))
    assert s.components == 2
    assert s.rows() == [[-1]]
    assert alexander(s) == Poly((-1, 1))


def test_missing_generator():
    with pytest.raises(DomainError):
        seifert_matrix(parse_braid("3: 1 1"))


def test_raw_matrices_and_shapes():
    assert knot_signature([[-1, 1], [0, -1]]) == -2
    assert alexander([]) == Poly((1,))
    with pytest.raises(ShapeError):
        SeifertMatrix.of([[1, 2]])


def test_normalize_alexander():
    X = Poly.x()
    assert normalize_alexander(-(X**3) + 3 * X**2 - X) == Poly((1, -3, 1))
    assert normalize_alexander(Poly(())).is_zero()


# S-equivalence
def test_enlargement_keeps_invariants(trefoil):
    s = seifert_matrix(trefoil)
    big = s_equiv_enlarge(s, [1, -2])
    assert big.size == 4
    assert alexander(big) == alexander(s)
    assert knot_signature(big) == knot_signature(s)
    with pytest.raises(ShapeError):
        s_equiv_enlarge(s, [1])


# Fibred knots
def test_fibred_trefoil():
    s = fibred_seifert(TREFOIL_MONODROMY, THETA)
    assert s.rows() == [[1, 1], [0, 1]]
    assert alexander(s) == Poly((1, -1, 1))
    assert knot_signature(s) == 2


def test_fibred_errors():
    with pytest.raises(SingularError):
        fibred_seifert(identity(2), THETA)
    with pytest.raises(NotSymplecticError):
        fibred_seifert([[2, 0], [0, 1]], THETA)
    with pytest.raises(SingularError):
        fibred_seifert(TREFOIL_MONODROMY, [[0, 0], [0, 0]])
    with pytest.raises(ShapeError):
        fibred_seifert(identity(3), THETA)


# End of tests/unit/test_knots_seifert.py
