# src/signet/forms/formation.py
"""Formations ``(H, theta; F, G)`` and their boundaries.

Subspaces are lists of column vectors in ``H``. The boundary of a formation
is the form induced by ``theta`` on ``G^perp / G``; it comes with the
lagrangian ``((F + G) cap G^perp) / G``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from signet.errors import DomainError, ShapeError
from signet.forms.linalg import Matrix, column_echelon, conj, identity, kernel, rank, scalar, solve
from signet.forms.matrix import EpsSymMatrix, as_form

Vector = List[object]


def bilinear(theta: Matrix, x: Sequence[object], y: Sequence[object]):
    """``x* theta y``."""
    acc = Fraction(0)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        cx = conj(xi)
        row = theta[i]
        for j, yj in enumerate(y):
            if yj != 0 and row[j] != 0:
                acc = acc + cx * row[j] * yj
    return acc


def gram(theta: Matrix, us: Sequence[Vector], vs: Sequence[Vector]) -> Matrix:
    return [[bilinear(theta, u, v) for v in vs] for u in us]


def is_isotropic(theta: Matrix, basis: Sequence[Vector]) -> bool:
    return all(x == 0 for row in gram(theta, basis, basis) for x in row)


def orthogonal(theta: Matrix, basis: Sequence[Vector], dim: int) -> List[Vector]:
    """``basis^perp`` as a list of column vectors."""
    if not basis:
        return [list(c) for c in zip(*identity(dim))]
    rows = [[sum((conj(b[i]) * theta[i][j] for i in range(dim)), Fraction(0)) for j in range(dim)] for b in basis]
    return kernel(rows, dim)


def intersect(us: Sequence[Vector], ws: Sequence[Vector], dim: int) -> List[Vector]:
    """Basis of ``span(us) cap span(ws)``."""
    if not us or not ws:
        return []
    M = [[u[i] for u in us] + [-w[i] for w in ws] for i in range(dim)]
    out = []
    for k in kernel(M, len(us) + len(ws)):
        v = [sum((k[a] * us[a][i] for a in range(len(us))), Fraction(0)) for i in range(dim)]
        out.append(v)
    return [list(r) for r in column_echelon(out)]


def _independent(vectors: Sequence[Vector]) -> List[Vector]:
    out: List[Vector] = []
    for v in vectors:
        if rank([list(x) for x in out + [list(v)]]) > len(out):
            out.append(list(v))
    return out


@dataclass(frozen=True)
class Formation:
    """An epsilon-symmetric formation: nonsingular ``(H, theta)``, lagrangian
    ``F`` and sublagrangian ``G``, both given by spanning column vectors."""

    ambient: EpsSymMatrix
    F: Tuple[Tuple[object, ...], ...]
    G: Tuple[Tuple[object, ...], ...]

    @classmethod
    def of(cls, theta, F: Sequence[Sequence[object]], G: Sequence[Sequence[object]], epsilon: int = -1) -> "Formation":
        """Validate and build a formation.

        :raises DomainError: If ``F`` is not a lagrangian or ``G`` not isotropic.
        """
        H = as_form(theta, epsilon)
        n = H.n
        h = H.rows()
        if rank(h) != n:
            raise DomainError("formation ambient form must be nonsingular")
        Fv = _independent([[scalar(x) for x in v] for v in F])
        Gv = _independent([[scalar(x) for x in v] for v in G])
        for v in Fv + Gv:
            if len(v) != n:
                raise ShapeError("subspace vectors must match the ambient dimension")
        if 2 * len(Fv) != n or not is_isotropic(h, Fv):
            raise DomainError("F is not a lagrangian")
        if not is_isotropic(h, Gv):
            raise DomainError("G is not a sublagrangian")
        return cls(H, tuple(tuple(v) for v in Fv), tuple(tuple(v) for v in Gv))


@dataclass(frozen=True)
class FormationBoundary:
    """``(G^perp/G, [theta])`` in a chosen complement basis, with its lagrangian."""

    form: EpsSymMatrix
    lagrangian: Tuple[Tuple[object, ...], ...]
    complement: Tuple[Tuple[object, ...], ...]


def formation_boundary(f: Formation) -> FormationBoundary:
    """Boundary of a formation.

    :param Formation f: Validated formation.
    :returns: The induced nonsingular form on ``G^perp / G`` (basis: a
        complement of ``G`` inside ``G^perp``) and the lagrangian
        ``((F + G) cap G^perp) / G`` in that basis, column-echelon canonical.
    :rtype: FormationBoundary
    """
    theta = f.ambient.rows()
    n = f.ambient.n
    G = [list(v) for v in f.G]
    F = [list(v) for v in f.F]
    perp = orthogonal(theta, G, n)
    comp = _independent(G + perp)[len(G):]
    B = gram(theta, comp, comp)
    form = EpsSymMatrix.of(B, f.ambient.epsilon)

    sub = intersect(_independent(F + G), perp, n)
    basis_cols = comp + G
    M = [[b[i] for b in basis_cols] for i in range(n)]
    coords = []
    for v in sub:
        x = solve(M, v)
        coords.append(x[: len(comp)])
    L = column_echelon([c for c in coords if any(t != 0 for t in c)])
    return FormationBoundary(form, L, tuple(tuple(c) for c in comp))


def boundary_formation(S, epsilon: int = 1) -> Formation:
    """Boundary formation of an epsilon-symmetric form ``(V, phi)``.

    The result is the nonsingular (-epsilon)-symmetric formation
    ``(H_{-eps}(V); V, graph(phi))`` with
    ``H_{-eps}(V) = (V + V*, [[0, 1], [-eps, 0]])``.
    """
    form = as_form(S, epsilon)
    n = form.n
    eps = -form.epsilon
    theta: Matrix = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        theta[i][n + i] = Fraction(1)
        theta[n + i][i] = Fraction(eps)
    V = [[Fraction(int(i == j)) for i in range(2 * n)] for j in range(n)]
    phi = form.rows()
    graph = [[Fraction(int(i == j)) for i in range(n)] + [phi[i][j] for i in range(n)] for j in range(n)]
    return Formation.of(theta, V, graph, eps)
