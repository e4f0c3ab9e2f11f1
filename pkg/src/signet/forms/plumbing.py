# src/signet/forms/plumbing.py
"""Algebraic plumbing of forms and plumbing matrices of weighted graphs."""

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from signet.errors import DomainError, ShapeError
from signet.forms.linalg import Matrix, conj, inverse, mat_mul, scalar
from signet.forms.matrix import EpsSymMatrix, as_form

# Edges of the E8 tree in the vertex order used by ``e8_matrix``.
_E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7))


def plumb(S, v: Sequence[object], w) -> EpsSymMatrix:
    """Adjoin one vertex: ``[[S, eps v*], [v, w]]``.

    :param S: :class:`EpsSymMatrix` (possibly 0x0) or raw matrix.
    :param v: Row vector of length ``n``.
    :param w: New diagonal entry; must satisfy ``conj(w) = eps w``.
    :returns: The plumbed form.
    :rtype: EpsSymMatrix
    :raises ShapeError: If ``len(v) != n``.
    :raises DomainError: If ``w`` breaks the symmetry.
    """
    form = as_form(S)
    eps = form.epsilon
    n = form.n
    if len(v) != n:
        raise ShapeError(f"plumbing vector has length {len(v)}, expected {n}")
    v = [scalar(x) for x in v]
    w = scalar(w)
    if conj(w) != eps * w:
        raise DomainError("new diagonal entry violates the form's symmetry")
    rows = [list(r) + [eps * conj(v[i])] for i, r in enumerate(form.rows())]
    rows.append(list(v) + [w])
    return EpsSymMatrix.of(rows, eps)


def plumb_complement(S, v: Sequence[object], w):
    """The scalar ``w - eps v S^{-1} v*`` splitting off the plumbed form.

    For invertible ``S`` the plumbed form is congruent to ``S + <that scalar>``.
    """
    form = as_form(S)
    eps = form.epsilon
    vrow = [[scalar(x) for x in v]]
    vcol = [[conj(x)] for x in vrow[0]]
    inner = mat_mul(mat_mul(vrow, inverse(form.rows())), vcol)[0][0] if form.n else Fraction(0)
    return scalar(w) - eps * inner


def plumbing_matrix(weights: Sequence[object], edges: Iterable[Tuple[int, int]]) -> EpsSymMatrix:
    """Symmetric matrix of a weighted graph: weights on the diagonal, 1 per edge.

    :raises DomainError: On loops or out-of-range vertices.
    """
    n = len(weights)
    rows: Matrix = [[Fraction(0)] * n for _ in range(n)]
    for i, w in enumerate(weights):
        rows[i][i] = scalar(w)
    for i, j in edges:
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise DomainError(f"bad plumbing edge ({i}, {j})")
        rows[i][j] = rows[i][j] + 1
        rows[j][i] = rows[j][i] + 1
    return EpsSymMatrix.of(rows)


def e8_matrix() -> EpsSymMatrix:
    """The even unimodular positive definite form E8."""
    return plumbing_matrix([2] * 8, _E8_EDGES)
