# tests/unit/test_forms_formation.py
# To run these tests, use:
# poetry run pytest
import pytest

from signet.errors import DomainError
from signet.forms.diagonalize import standard_symplectic
from signet.forms.formation import Formation, boundary_formation, formation_boundary


def _e(i, n=4):
    return [int(i == j) for j in range(n)]


def test_boundary_of_a_sublagrangian_formation():
    J = standard_symplectic(2)
    f = Formation.of(J, [_e(0), _e(1)], [_e(0)])
    b = formation_boundary(f)
    assert b.form.rows() == [[0, 1], [-1, 0]]
    assert b.form.epsilon == -1
    assert b.lagrangian == ((1, 0),)


def test_boundary_formation_of_a_form_has_lagrangian_graph():
    f = boundary_formation([[2]])
    assert f.ambient.epsilon == -1
    assert f.ambient.rows() == [[0, 1], [-1, 0]]
    # graph(phi) is itself a lagrangian, so nothing is left on the boundary
    assert formation_boundary(f).form.n == 0


def test_formation_validation():
    J = standard_symplectic(2)
    with pytest.raises(DomainError):
        Formation.of(J, [_e(0)], [])
    with pytest.raises(DomainError):
        Formation.of(J, [_e(0), _e(1)], [_e(0), _e(2)])
    with pytest.raises(DomainError):
        Formation.of([[0, 0], [0, 0]], [[1, 0]], [])


# End of tests/unit/test_forms_formation.py
