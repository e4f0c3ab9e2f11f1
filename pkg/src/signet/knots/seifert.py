# src/signet/knots/seifert.py
"""Seifert matrices of braid closures and the invariants read off them.

The canonical surface of a braid closure has one disc per strand and one
band per letter. A basis of its first homology is given by the loops
between consecutive bands in the same column; they are ordered column by
column, then by position in the word.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from signet.errors import DomainError, NotSymplecticError, ShapeError, SingularError
from signet.exact.poly import Poly
from signet.exact.ratfunc import RatFunc
from signet.forms.linalg import (
    Matrix,
    as_matrix,
    congruence,
    determinant,
    identity,
    inverse,
    mat_add,
    mat_mul,
    mat_scale,
    rank,
    shape,
    transpose,
)
from signet.forms.matrix import EpsSymMatrix
from signet.forms.signature import signature
from signet.knots.braid import BraidWord, closure_components

logger = logging.getLogger(__name__)

Cycle = Tuple[int, int, int]


@dataclass(frozen=True)
class SeifertMatrix:
    """Linking matrix ``sigma[i][j] = lk(a_i, a_j^+)`` of a Seifert surface.

    ``components`` is the number of link components; matrices not coming
    from a braid are treated as knots.
    """

    sigma: Tuple[Tuple[Fraction, ...], ...]
    components: int = 1

    @classmethod
    def of(cls, rows: Sequence[Sequence[object]], components: int = 1) -> "SeifertMatrix":
        m = as_matrix(rows)
        n, k = shape(m)
        if n != k:
            raise ShapeError("a Seifert matrix must be square")
        if components < 1:
            raise DomainError("a link has at least one component")
        return cls(tuple(tuple(Fraction(x) for x in r) for r in m), components)

    @property
    def size(self) -> int:
        return len(self.sigma)

    def rows(self) -> Matrix:
        return [list(r) for r in self.sigma]

    def symmetrized(self) -> Matrix:
        """``sigma + sigma^T``."""
        return mat_add(self.rows(), transpose(self.rows()))

    def intersection_form(self) -> Matrix:
        """``sigma - sigma^T``."""
        return mat_add(self.rows(), mat_scale(-1, transpose(self.rows())))

    def as_dict(self) -> dict:
        return {
            "sigma": [[str(x) for x in r] for r in self.sigma],
            "components": self.components,
        }


# -------------------- braid closures --------------------
def _cycles(b: BraidWord) -> List[Cycle]:
    out: List[Cycle] = []
    for col in range(1, b.strands):
        positions = [p for p, (i, _) in enumerate(b.letters) if i == col]
        if not positions:
            raise DomainError(f"generator {col} never occurs; the canonical surface is disconnected")
        out.extend((col, p1, p2) for p1, p2 in zip(positions, positions[1:]))
    return out


def seifert_matrix(b: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the canonical surface of the closure of ``b``.

    :param BraidWord b: Braid in which every generator occurs.
    :rtype: SeifertMatrix
    :raises DomainError: If some generator is missing from the word.
    """
    cycles = _cycles(b)
    signs = [e for _, e in b.letters]
    n = len(cycles)
    sigma = [[0] * n for _ in range(n)]
    for x, (i, p1, p2) in enumerate(cycles):
        if signs[p1] > 0 and signs[p2] > 0:
            sigma[x][x] = -1
        elif signs[p1] < 0 and signs[p2] < 0:
            sigma[x][x] = 1
        for y, (j, q1, q2) in enumerate(cycles):
            if j == i and q1 == p2:
                # y follows x in the same column and they share band p2
                if signs[p2] > 0:
                    sigma[x][y] = 1
                else:
                    sigma[y][x] = -1
            elif j == i + 1:
                if p1 < q1 < p2 < q2:
                    sigma[x][y] = 1
                elif q1 < p1 < q2 < p2:
                    sigma[x][y] = -1
    components = closure_components(b)
    s = SeifertMatrix.of(sigma, components)
    if n and rank(s.intersection_form()) != n - (components - 1):
        raise DomainError("intersection form does not match the surface")
    logger.debug("seifert_matrix: %d cycles, %d components", n, components)
    return s


# -------------------- invariants --------------------
def as_seifert(s) -> SeifertMatrix:
    if isinstance(s, SeifertMatrix):
        return s
    if isinstance(s, BraidWord):
        return seifert_matrix(s)
    return SeifertMatrix.of(s)


def normalize_alexander(P: Poly) -> Poly:
    """Divide out the lowest power of ``z`` and make the leading coefficient positive."""
    if P.is_zero():
        return P
    k = next(i for i, c in enumerate(P.coeffs) if c)
    P = Poly(P.coeffs[k:])
    return -P if P.lc < 0 else P


def alexander(s) -> Poly:
    """``det(z sigma - sigma^T)`` up to units ``+-z^k``.

    :param s: :class:`SeifertMatrix`, :class:`BraidWord` or square matrix.
    :returns: Normalized polynomial; zero when the form is degenerate.
    :rtype: Poly
    """
    s = as_seifert(s)
    if s.size == 0:
        return Poly((1,))
    z = RatFunc.x()
    rows = s.rows()
    M = [[z * rows[i][j] - rows[j][i] for j in range(s.size)] for i in range(s.size)]
    d = determinant(M)
    d = d if isinstance(d, RatFunc) else RatFunc(d)
    return normalize_alexander(d.num)


def knot_signature(s) -> int:
    """``tau(sigma + sigma^T)``."""
    s = as_seifert(s)
    if s.size == 0:
        return 0
    return signature(EpsSymMatrix.of(s.symmetrized())).tau


def is_unimodular(s) -> bool:
    """Whether ``det(sigma - sigma^T) = +-1``."""
    s = as_seifert(s)
    return abs(determinant(s.intersection_form())) == 1


def s_equiv_enlarge(s, alpha: Sequence[object]) -> SeifertMatrix:
    """Elementary enlargement ``[[sigma, 0, 0], [0, 0, 1], [alpha, 0, 0]]``.

    :param alpha: Row of length ``size``.
    :raises ShapeError: If ``alpha`` has the wrong length.
    """
    s = as_seifert(s)
    if len(alpha) != s.size:
        raise ShapeError(f"alpha has length {len(alpha)}, expected {s.size}")
    n = s.size
    rows = [list(r) + [0, 0] for r in s.rows()]
    rows.append([0] * n + [0, 1])
    rows.append(list(alpha) + [0, 0])
    return SeifertMatrix.of(rows, s.components)


def fibred_seifert(A, theta) -> SeifertMatrix:
    """Seifert matrix ``theta (I - A)^-1`` of a fibred knot with monodromy ``A``.

    :param A: Automorphism of the skew form ``theta``.
    :param theta: Nonsingular skew-symmetric matrix.
    :raises NotSymplecticError: If ``A^T theta A != theta``.
    :raises SingularError: If ``theta`` is singular or 1 is an eigenvalue of ``A``.
    """
    th = EpsSymMatrix.of(theta, -1).rows()
    A = as_matrix(A)
    n = len(th)
    if shape(A) != (n, n):
        raise ShapeError("monodromy and form sizes differ")
    if rank(th) != n:
        raise SingularError("skew form is singular")
    if congruence(A, th) != th:
        raise NotSymplecticError("monodromy does not preserve the form")
    one_minus = mat_add(identity(n), mat_scale(-1, A))
    if determinant(one_minus) == 0:
        raise SingularError("1 is an eigenvalue of the monodromy")
    sigma = mat_mul(th, inverse(one_minus))
    s = SeifertMatrix.of(sigma)
    if s.intersection_form() != th or mat_mul(inverse(s.rows()), transpose(s.rows())) != A:
        raise DomainError("fibred Seifert matrix failed its identities")
    return s
