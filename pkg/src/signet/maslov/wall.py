# src/signet/maslov/wall.py
"""Wall forms of triformations, the Wall-Maslov triple index and the Meyer cocycle.

For lagrangians ``L1, L2, L3`` of a nonsingular ``(-eps)``-symmetric
``(H, theta)``, the Wall form lives on ``W = ker(L1 + L2 + L3 -> H)`` with
``psi(u, v) = theta(u_1, v_2)``; it is ``eps``-symmetric and needs no
transversality. The triple index is its signature on the standard space.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from signet.errors import DomainError, ShapeError
from signet.forms.formation import bilinear, is_isotropic
from signet.forms.linalg import column_echelon, identity, kernel, mat_mul, rank
from signet.forms.matrix import EpsSymMatrix, as_form
from signet.forms.signature import signature
from signet.maslov.symplectic import Lagrangian, graph_lagrangian, validate_symplectic

logger = logging.getLogger(__name__)

Basis = Tuple[Tuple[object, ...], ...]


def _validate_lagrangian(theta, basis: Sequence[Sequence[object]], n: int, label: str) -> Basis:
    vs = [[Fraction(x) for x in v] for v in basis]
    if any(len(v) != n for v in vs):
        raise ShapeError(f"{label} vectors must have length {n}")
    canon = column_echelon(vs)
    if 2 * len(canon) != n or not is_isotropic(theta, [list(v) for v in canon]):
        raise DomainError(f"{label} is not a lagrangian")
    return canon


@dataclass(frozen=True)
class Triformation:
    """``(H, theta; L1, L2, L3)`` with three lagrangians of a nonsingular form."""

    ambient: EpsSymMatrix
    L1: Basis
    L2: Basis
    L3: Basis

    @classmethod
    def of(cls, theta, L1, L2, L3, epsilon: int = -1) -> "Triformation":
        """Validate the ambient form and the three lagrangians.

        :param theta: Ambient ``epsilon``-symmetric matrix (skew by default).
        :raises DomainError: If ``theta`` is singular or some ``L_i`` is not a lagrangian.
        """
        H = as_form(theta, epsilon)
        h = H.rows()
        if rank(h) != H.n:
            raise DomainError("triformation ambient form must be nonsingular")
        Ls = [_validate_lagrangian(h, L, H.n, name) for L, name in ((L1, "L1"), (L2, "L2"), (L3, "L3"))]
        return cls(H, *Ls)

    def wall_form(self) -> EpsSymMatrix:
        """``(W, psi)``, an ``(-epsilon)``-symmetric form of dimension ``dim W``."""
        theta = self.ambient.rows()
        n = self.ambient.n
        L1, L2, L3 = ([list(v) for v in L] for L in (self.L1, self.L2, self.L3))
        k1, k2 = len(L1), len(L2)
        cols = L1 + L2 + L3
        M = [[c[i] for c in cols] for i in range(n)]
        W = kernel(M, len(cols))
        firsts = [_combine(L1, w[:k1], n) for w in W]
        seconds = [_combine(L2, w[k1:k1 + k2], n) for w in W]
        psi = [[bilinear(theta, u, v) for v in seconds] for u in firsts]
        logger.debug("wall_form: dim W = %d", len(W))
        return EpsSymMatrix.of(psi, -self.ambient.epsilon)


def _combine(basis: List[List[object]], coeffs: Sequence[object], n: int) -> List[object]:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, basis):
        if c != 0:
            out = [a + c * b for a, b in zip(out, v)]
    return out


def wall_form(theta, L1, L2, L3, epsilon: int = -1) -> EpsSymMatrix:
    """Wall form of the triformation ``(H, theta; L1, L2, L3)``."""
    return Triformation.of(theta, L1, L2, L3, epsilon).wall_form()


def _validate_same_space(*Ls: Lagrangian) -> None:
    space = Ls[0].space
    if any(L.space != space for L in Ls[1:]):
        raise DomainError("lagrangians live in different symplectic spaces")


def wall_maslov(L1: Lagrangian, L2: Lagrangian, L3: Lagrangian) -> int:
    """Wall-Maslov index ``tau(L1, L2, L3)``.

    :returns: Signature of the Wall form on triples ``v1 + v2 + v3 = 0``.
    :rtype: int
    :raises DomainError: If the lagrangians live in different spaces.
    """
    _validate_same_space(L1, L2, L3)
    t = Triformation(EpsSymMatrix.of(L1.space.gram, -1), L1.basis, L2.basis, L3.basis)
    return signature(t.wall_form()).tau


def cocycle_defect(L1: Lagrangian, L2: Lagrangian, L3: Lagrangian, L4: Lagrangian) -> int:
    """Alternating sum of the four triple indices; always 0."""
    _validate_same_space(L1, L2, L3, L4)
    return wall_maslov(L2, L3, L4) - wall_maslov(L1, L3, L4) + wall_maslov(L1, L2, L4) - wall_maslov(L1, L2, L3)


def meyer(g0, g1, g2) -> int:
    """Meyer cocycle: triple index of the three graph lagrangians in the doubled space.

    :raises NotSymplecticError: If some ``g_i`` is not symplectic.
    :raises ShapeError: If the sizes differ.
    """
    Ms = [validate_symplectic(g) for g in (g0, g1, g2)]
    if len({len(M) for M in Ms}) != 1:
        raise ShapeError("meyer needs symplectic matrices of one size")
    return wall_maslov(*(graph_lagrangian(M) for M in Ms))


def meyer_pair(A, B) -> int:
    """Non-homogeneous form ``m(A, B) = Meyer(1, A, AB)``."""
    M = validate_symplectic(A)
    return meyer(identity(len(M)), M, mat_mul(M, validate_symplectic(B)))
