# src/signet/forms/matrix.py
"""The :class:`EpsSymMatrix` container for epsilon-symmetric forms.

One type carries symmetric (``epsilon = +1``), skew (``epsilon = -1``) and
hermitian forms; the involution is read off the entry type (conjugation for
cyclotomic entries, identity otherwise).
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from signet.errors import DomainError, ShapeError
from signet.exact.cyclotomic import CycNumber
from signet.exact.ratfunc import RatFunc
from signet.forms.linalg import Matrix, as_matrix, conj


def _validate_square(rows: Matrix) -> None:
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ShapeError("matrix must be square")


def involution_of(rows: Matrix) -> str:
    """``"conjugation"`` for cyclotomic entries, ``"identity"`` otherwise."""
    for r in rows:
        for x in r:
            if isinstance(x, CycNumber):
                return "conjugation"
    return "identity"


def field_of(rows: Matrix) -> str:
    """Name of the scalar field: ``"Q"``, ``"Q(X)"`` or ``"Q(zeta)"``."""
    kinds = set()
    for r in rows:
        for x in r:
            if isinstance(x, CycNumber):
                kinds.add("Q(zeta)")
            elif isinstance(x, RatFunc):
                kinds.add("Q(X)")
    if len(kinds) > 1:
        raise DomainError("matrix mixes rational-function and cyclotomic entries")
    return kinds.pop() if kinds else "Q"


@dataclass(frozen=True)
class EpsSymMatrix:
    """Square matrix ``S`` over an exact field with ``conj(S)^T = epsilon S``.

    Build instances with :meth:`of`, which validates the symmetry.
    """

    epsilon: int
    entries: Tuple[Tuple[object, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[object]], epsilon: int = 1) -> "EpsSymMatrix":
        """Validate and wrap a matrix.

        :param rows: Square matrix as a sequence of rows.
        :param int epsilon: +1 or -1.
        :raises ShapeError: If the matrix is not square.
        :raises DomainError: If epsilon is invalid or the symmetry fails.
        """
        if epsilon not in (1, -1):
            raise DomainError("epsilon must be +1 or -1")
        m = as_matrix(rows)
        _validate_square(m)
        field_of(m)
        n = len(m)
        for i in range(n):
            for j in range(i, n):
                if conj(m[j][i]) != epsilon * m[i][j]:
                    kind = "hermitian" if epsilon == 1 else "skew-hermitian"
                    raise DomainError(f"matrix is not {kind} at ({i}, {j})")
        return cls(epsilon, tuple(tuple(r) for r in m))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def involution(self) -> str:
        return involution_of(self.rows())

    @property
    def field(self) -> str:
        return field_of(self.rows())

    def rows(self) -> Matrix:
        """A fresh mutable copy of the entries."""
        return [list(r) for r in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def evaluate(self, a) -> "EpsSymMatrix":
        """Substitute ``X = a`` in rational-function entries.

        :raises SingularError: If ``a`` is a pole of some entry.
        """
        rows = [[x.evaluate(a) if isinstance(x, RatFunc) else x for x in r] for r in self.entries]
        return EpsSymMatrix(self.epsilon, tuple(tuple(r) for r in rows))

    def __neg__(self) -> "EpsSymMatrix":
        return EpsSymMatrix(self.epsilon, tuple(tuple(-x for x in r) for r in self.entries))


def as_form(S, epsilon: int = 1) -> EpsSymMatrix:
    """Accept an :class:`EpsSymMatrix` or a raw matrix."""
    if isinstance(S, EpsSymMatrix):
        return S
    return EpsSymMatrix.of(S, epsilon)
