# src/signet/maslov/symplectic.py
"""Standard symplectic spaces, lagrangians and graphs of symplectic maps.

``SympSpace(n)`` is ``Q^2n`` with ``Omega(x, y) = sum x_i y_(n+i) - x_(n+i) y_i``,
whose Gram matrix is ``[[0, I], [-I, 0]]``. Lagrangians are stored by a
canonical column-echelon basis, so equal subspaces compare equal.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from signet.errors import DomainError, NotSymplecticError, ShapeError
from signet.forms.diagonalize import standard_symplectic
from signet.forms.formation import is_isotropic
from signet.forms.linalg import Matrix, as_matrix, column_echelon, congruence, from_columns, mat_mul, shape

Vector = List[object]


@dataclass(frozen=True)
class SympSpace:
    """``(Q^2n, Omega)`` with the fixed standard Gram matrix."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError("symplectic space needs n >= 1")

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def gram(self) -> Matrix:
        return standard_symplectic(self.n)

    def omega(self, x: Sequence[object], y: Sequence[object]):
        n = self.n
        return sum((x[i] * y[n + i] - x[n + i] * y[i] for i in range(n)), Fraction(0))

    def is_lagrangian(self, basis: Sequence[Sequence[object]]) -> bool:
        vs = [list(v) for v in basis]
        if any(len(v) != self.dim for v in vs):
            return False
        return len(column_echelon(vs)) == self.n and is_isotropic(self.gram, vs)

    def lagrangian(self, basis: Sequence[Sequence[object]]) -> "Lagrangian":
        return Lagrangian.of(self, basis)


@dataclass(frozen=True)
class Lagrangian:
    """A lagrangian subspace, spanned by the rows of ``basis`` (echelon canonical)."""

    space: SympSpace
    basis: Tuple[Tuple[object, ...], ...]

    @classmethod
    def of(cls, space: SympSpace, vectors: Sequence[Sequence[object]]) -> "Lagrangian":
        """Validate and canonicalize.

        :param SympSpace space: Ambient space.
        :param vectors: Spanning column vectors, each of length ``2n``.
        :raises ShapeError: If a vector has the wrong length.
        :raises DomainError: If the span is not isotropic of dimension ``n``.
        """
        vs = [[Fraction(x) for x in v] for v in vectors]
        for v in vs:
            if len(v) != space.dim:
                raise ShapeError(f"lagrangian vectors must have length {space.dim}")
        canon = column_echelon(vs)
        if len(canon) != space.n:
            raise DomainError(f"lagrangian must have dimension {space.n}, got {len(canon)}")
        if not is_isotropic(space.gram, [list(v) for v in canon]):
            raise DomainError("subspace is not isotropic")
        return cls(space, canon)

    def vectors(self) -> List[Vector]:
        return [list(v) for v in self.basis]

    def matrix(self) -> Matrix:
        """The ``2n x n`` matrix with the basis vectors as columns."""
        return from_columns(self.vectors(), self.space.dim)

    def transform(self, g: Matrix) -> "Lagrangian":
        """``g(L)`` for a symplectic ``g``."""
        validate_symplectic(g, self.space.n)
        image = mat_mul(as_matrix(g), self.matrix())
        return Lagrangian.of(self.space, [list(c) for c in zip(*image)])


def coordinate_lagrangian(n: int, which: str = "p") -> Lagrangian:
    """``span(e_1..e_n)`` (``which="p"``) or ``span(e_(n+1)..e_2n)`` (``"q"``)."""
    space = SympSpace(n)
    offset = {"p": 0, "q": n}.get(which)
    if offset is None:
        raise DomainError("coordinate lagrangian is 'p' or 'q'")
    return Lagrangian.of(space, [[int(i == j + offset) for i in range(2 * n)] for j in range(n)])


def symmetric_graph(S: Sequence[Sequence[object]]) -> Lagrangian:
    """``{(x, S x)}`` for a symmetric ``n x n`` rational matrix ``S``."""
    rows = as_matrix(S)
    n = len(rows)
    cols = [[Fraction(int(i == j)) for i in range(n)] + [rows[i][j] for i in range(n)] for j in range(n)]
    return Lagrangian.of(SympSpace(n), cols)


def is_symplectic(g: Sequence[Sequence[object]]) -> bool:
    M = as_matrix(g)
    r, c = shape(M)
    if r != c or r % 2 or r == 0:
        return False
    return congruence(M, standard_symplectic(r // 2)) == standard_symplectic(r // 2)


def validate_symplectic(g: Sequence[Sequence[object]], n: int = None) -> Matrix:
    """Return ``g`` as a matrix, or raise.

    :raises NotSymplecticError: Unless ``g^T Omega g = Omega``.
    """
    M = as_matrix(g)
    if n is not None and shape(M) != (2 * n, 2 * n):
        raise ShapeError(f"expected a {2 * n}x{2 * n} matrix")
    if not is_symplectic(M):
        raise NotSymplecticError("matrix does not preserve the standard skew form")
    return M


def graph_lagrangian(g: Sequence[Sequence[object]]) -> Lagrangian:
    """Graph ``{(x, g x)}`` of a symplectic map, a lagrangian of ``(Q^2n + Q^2n, Omega + -Omega)``.

    The doubled space is identified with ``SympSpace(2n)`` through
    ``(p, q, p', q') -> (p, p', q, -q')``, which carries ``Omega + -Omega``
    to the standard form.

    :raises NotSymplecticError: If ``g`` is not symplectic.
    """
    M = validate_symplectic(g)
    n = len(M) // 2
    cols = []
    for j in range(2 * n):
        x = [Fraction(int(i == j)) for i in range(2 * n)]
        y = [M[i][j] for i in range(2 * n)]
        cols.append(x[:n] + y[:n] + x[n:] + [-v for v in y[n:]])
    return Lagrangian.of(SympSpace(2 * n), cols)

