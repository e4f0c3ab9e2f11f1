# tests/unit/test_maslov_wall.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction

import pytest

from signet.cli.corpus import random_lagrangian, random_symplectic
from signet.errors import DomainError, NotSymplecticError, ShapeError
from signet.forms.diagonalize import standard_symplectic
from signet.forms.linalg import identity, mat_mul
from signet.forms.signature import signature
from signet.maslov.symplectic import (
    Lagrangian,
    SympSpace,
    coordinate_lagrangian,
    graph_lagrangian,
    is_symplectic,
    symmetric_graph,
    validate_symplectic,
)
from signet.maslov.wall import Triformation, cocycle_defect, meyer, meyer_pair, wall_maslov

ROTATION = [[0, -1], [1, 0]]


# Symplectic spaces and lagrangians
def test_space_basics():
    V = SympSpace(2)
    assert V.dim == 4
    assert V.gram == standard_symplectic(2)
    assert V.omega([1, 0, 0, 0], [0, 0, 1, 0]) == 1
    with pytest.raises(DomainError):
        SympSpace(0)


def test_coordinate_lagrangians():
    assert coordinate_lagrangian(2, "p").basis == ((1, 0, 0, 0), (0, 1, 0, 0))
    assert SympSpace(2).is_lagrangian(coordinate_lagrangian(2, "q").vectors())
    with pytest.raises(DomainError):
        coordinate_lagrangian(2, "x")


def test_lagrangians_are_canonical():
    V = SympSpace(1)
    assert Lagrangian.of(V, [[2, 2]]) == Lagrangian.of(V, [[1, 1]])
    assert symmetric_graph([[1]]) == Lagrangian.of(V, [["1/3", "1/3"]])


def test_lagrangian_validation():
    with pytest.raises(DomainError):
        Lagrangian.of(SympSpace(1), [[1, 0], [0, 1]])
    with pytest.raises(ShapeError):
        Lagrangian.of(SympSpace(1), [[1, 0, 0]])
    with pytest.raises(DomainError):
        Lagrangian.of(SympSpace(2), [[1, 0, 0, 0], [0, 0, 1, 0]])


def test_transform():
    p = coordinate_lagrangian(1, "p")
    assert p.transform(ROTATION) == coordinate_lagrangian(1, "q")
    with pytest.raises(NotSymplecticError):
        p.transform([[2, 0], [0, 1]])


def test_symplectic_checks(rng):
    assert is_symplectic([[1, 1], [0, 1]])
    assert not is_symplectic(identity(3))
    assert is_symplectic(random_symplectic(rng, 2))
    with pytest.raises(ShapeError):
        validate_symplectic(identity(2), n=2)


def test_graph_lives_in_doubled_space():
    G = graph_lagrangian(identity(2))
    assert G.space == SympSpace(2)
    with pytest.raises(NotSymplecticError):
        graph_lagrangian([[1, 1], [1, 1]])


# Triple index
@pytest.mark.parametrize("S", [[[1]], [[-1]], [[2, 1], [1, 3]], [[1, 2], [2, 1]], [[-1, 0], [0, -4]]])
def test_index_of_symmetric_graph_is_signature(S):
    n = len(S)
    p, q = coordinate_lagrangian(n, "p"), coordinate_lagrangian(n, "q")
    assert wall_maslov(p, q, symmetric_graph(S)) == signature(S).tau


def test_index_antisymmetry_and_degeneracy():
    p, q = coordinate_lagrangian(1, "p"), coordinate_lagrangian(1, "q")
    L = symmetric_graph([[1]])
    assert wall_maslov(q, p, L) == -1
    assert wall_maslov(p, p, q) == 0


def test_index_needs_one_space():
    with pytest.raises(DomainError):
        wall_maslov(coordinate_lagrangian(1), coordinate_lagrangian(2), coordinate_lagrangian(1))


def test_cocycle_defect_vanishes(rng):
    for n in (1, 2):
        for _ in range(5):
            Ls = [random_lagrangian(rng, n) for _ in range(4)]
            assert cocycle_defect(*Ls) == 0


def test_wall_form_of_explicit_triformation():
    t = Triformation.of(standard_symplectic(1), [[1, 0]], [[0, 1]], [[1, 1]])
    form = t.wall_form()
    assert form.epsilon == 1
    assert form.rows() == [[1]]


def test_triformation_validation():
    with pytest.raises(DomainError):
        Triformation.of(standard_symplectic(1), [[1, 0], [0, 1]], [[0, 1]], [[1, 1]])
    with pytest.raises(DomainError):
        Triformation.of([[0, 0], [0, 0]], [[1, 0]], [[0, 1]], [[1, 1]])


# Meyer cocycle
def test_meyer_vanishes_on_repeated_arguments(rng):
    B = random_symplectic(rng, 1)
    assert meyer(identity(2), identity(2), identity(2)) == 0
    assert meyer_pair(identity(2), B) == 0
    assert meyer_pair(B, identity(2)) == 0


def test_meyer_cocycle_identity(rng):
    for n in (1, 2):
        A, B, C = (random_symplectic(rng, n) for _ in range(3))
        AB, BC = mat_mul(A, B), mat_mul(B, C)
        assert meyer_pair(A, B) + meyer_pair(AB, C) == meyer_pair(A, BC) + meyer_pair(B, C)


def test_meyer_bound(rng):
    A, B = random_symplectic(rng, 1), random_symplectic(rng, 1)
    assert abs(meyer_pair(A, B)) <= 2
    assert abs(meyer_pair(ROTATION, ROTATION)) <= 2


def test_meyer_errors():
    with pytest.raises(NotSymplecticError):
        meyer(identity(2), [[2, 0], [0, 1]], identity(2))
    with pytest.raises(ShapeError):
        meyer(identity(2), identity(4), identity(2))


def test_fraction_entries_accepted():
    half = [[Fraction(1), Fraction(1, 2)], [Fraction(0), Fraction(1)]]
    assert is_symplectic(half)
    # rank-one Wall form on commuting shears
    assert abs(meyer_pair(half, half)) == 1


# End of tests/unit/test_maslov_wall.py
