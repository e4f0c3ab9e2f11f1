# src/signet/forms/diagonalize.py
"""Congruence normal forms: Lagrange diagonalization and explicit splittings.

Lagrange reduction pivots on the first nonzero diagonal entry of the
trailing block. When the whole diagonal vanishes but the block does not,
the congruence ``col_i += c col_j, row_i += conj(c) row_j`` with
``c = conj(M_ij)`` creates the diagonal entry ``2 |M_ij|^2``. On a regular
matrix no pivot search is ever needed and the diagonal produced is
``mu_k / mu_{k-1}``.
"""

import logging
from fractions import Fraction
from typing import List, NamedTuple, Tuple

from signet.errors import DomainError, SingularError
from signet.forms.linalg import Matrix, conj, identity
from signet.forms.matrix import as_form

logger = logging.getLogger(__name__)


class Diagonalization(NamedTuple):
    """Result of :func:`diagonalize`: ``A* S A = diag(D)``."""

    A: Matrix
    D: Tuple[object, ...]


def _add_multiple(M: Matrix, A: Matrix, target: int, source: int, c) -> None:
    """Apply ``E = I + c e_source e_target^T`` by congruence, in place."""
    n = len(M)
    cc = conj(c)
    for a in range(n):
        M[a][target] = M[a][target] + c * M[a][source]
    for b in range(n):
        M[target][b] = M[target][b] + cc * M[source][b]
    for a in range(n):
        A[a][target] = A[a][target] + c * A[a][source]


def _swap(M: Matrix, A: Matrix, i: int, j: int) -> None:
    M[i], M[j] = M[j], M[i]
    for row in M:
        row[i], row[j] = row[j], row[i]
    for row in A:
        row[i], row[j] = row[j], row[i]


def lagrange_reduce(rows: Matrix) -> Diagonalization:
    """Diagonalize a hermitian matrix given as raw rows (no validation)."""
    M = [list(r) for r in rows]
    n = len(M)
    A = identity(n)
    diag: List[object] = []
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][i] != 0), None)
        if p is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if M[i][j] != 0),
                None,
            )
            if pair is None:
                diag.extend(M[i][i] for i in range(k, n))
                break
            i, j = pair
            logger.debug("lagrange: zero diagonal, mixing rows %d and %d", i, j)
            _add_multiple(M, A, i, j, conj(M[i][j]))
            p = i
        if p != k:
            _swap(M, A, p, k)
        piv = M[k][k]
        for r in range(k + 1, n):
            if M[k][r] != 0:
                _add_multiple(M, A, r, k, -M[k][r] / piv)
        diag.append(M[k][k])
    return Diagonalization(A, tuple(diag))


def diagonalize(S, epsilon: int = 1) -> Diagonalization:
    """Diagonalize a symmetric or hermitian form by congruence.

    :param S: :class:`EpsSymMatrix` or raw square matrix.
    :param int epsilon: Must be +1; skew forms use :func:`symplectic_basis`.
    :returns: ``(A, D)`` with ``A* S A = diag(D)``.
    :rtype: Diagonalization
    :raises DomainError: If the form is not hermitian.
    """
    if epsilon != 1:
        raise DomainError("diagonalize needs epsilon = +1; use symplectic_basis for skew forms")
    form = as_form(S, epsilon)
    if form.epsilon != 1:
        raise DomainError("diagonalize needs a symmetric or hermitian form")
    return lagrange_reduce(form.rows())


def hyperbolic_split(lam, a) -> Matrix:
    """Explicit isomorphism between ``[[0, lam], [lam, a]]`` and ``diag(1, -1)``.

    :returns: ``P`` with ``P^T diag(1, -1) P = [[0, lam], [lam, a]]``;
        ``P^{-1}`` diagonalizes the hyperbolic-type matrix.
    :raises SingularError: If ``lam`` is zero.
    """
    if lam == 0:
        raise SingularError("lambda must be nonzero")
    half = Fraction(1, 2)
    return [[lam, (a + 1) * half], [lam, (a - 1) * half]]


def generator_relation(x, y) -> Matrix:
    """Congruence realizing ``<x> + <y> = <x + y> + <xy/(x + y)>``.

    :returns: ``P`` with ``P^T diag(x, y) P = diag(x + y, x y / (x + y))``.
    :raises SingularError: If ``x + y = 0``.
    """
    s = x + y
    if s == 0:
        raise SingularError("x + y must be nonzero")
    return [[Fraction(1), -y / s], [Fraction(1), x / s]]


def symplectic_basis(S) -> Matrix:
    """Darboux basis of a nonsingular skew-symmetric form.

    :param S: Skew-symmetric matrix (identity involution).
    :returns: ``A`` with ``A^T S A = [[0, I], [-I, 0]]``.
    :rtype: Matrix
    :raises SingularError: If the form is singular.
    """
    form = as_form(S, -1)
    if form.epsilon != -1:
        raise DomainError("symplectic_basis needs a skew form")
    M = form.rows()
    n = len(M)
    if n % 2:
        raise SingularError("odd-dimensional skew form is singular")

    def omega(x, y):
        acc = Fraction(0)
        for i in range(n):
            if x[i] != 0:
                for j in range(n):
                    if y[j] != 0 and M[i][j] != 0:
                        acc = acc + x[i] * M[i][j] * y[j]
        return acc

    remaining = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    us, vs = [], []
    while remaining:
        u = remaining.pop(0)
        k = next((t for t, w in enumerate(remaining) if omega(u, w) != 0), None)
        if k is None:
            raise SingularError("skew form is singular")
        w = remaining.pop(k)
        s = omega(u, w)
        v = [x / s for x in w]
        nxt = []
        for w in remaining:
            a, b = omega(w, v), omega(w, u)
            nxt.append([wi - a * ui + b * vi for wi, ui, vi in zip(w, u, v)])
        remaining = nxt
        us.append(u)
        vs.append(v)
    cols = us + vs
    return [[c[i] for c in cols] for i in range(n)]


def standard_symplectic(n: int) -> Matrix:
    """``[[0, I_n], [-I_n, 0]]``."""
    J = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        J[i][n + i] = Fraction(1)
        J[n + i][i] = Fraction(-1)
    return J
