# src/signet/sturm/hermite.py
"""Jacobi-Hermite and Bezoutian root-counting matrices.

For a monic squarefree ``P`` of degree ``n`` the Hankel matrix of power
sums ``S(P)_{ij} = sigma_{i+j}`` has signature equal to the number of real
roots, and ``S(P)(t I - C(P))`` has signature
``#{roots < t} - #{roots > t}``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from signet.errors import DomainError
from signet.exact.poly import Poly
from signet.forms.linalg import Matrix, identity, mat_add, mat_mul, mat_scale, transpose
from signet.forms.matrix import EpsSymMatrix
from signet.forms.signature import signature
from signet.sturm.chain import is_regular


@dataclass(frozen=True)
class JacobiHermiteData:
    """Companion matrix, power sums ``sigma_0 .. sigma_{2n-2}`` and Hankel matrix."""

    companion: Tuple[Tuple[Fraction, ...], ...]
    power_sums: Tuple[Fraction, ...]
    hermite: EpsSymMatrix

    def companion_rows(self) -> Matrix:
        return [list(r) for r in self.companion]


def _validate_monic_squarefree(P: Poly) -> None:
    if P.degree < 1:
        raise DomainError("polynomial must be non-constant")
    if P.lc != 1:
        raise DomainError("polynomial must be monic")
    if not is_regular(P):
        raise DomainError("polynomial must be squarefree")


def companion_matrix(P: Poly) -> Matrix:
    """Companion matrix with ones below the diagonal and last column ``a_0 .. a_{n-1}``.

    Here ``P = X^n - a_{n-1} X^{n-1} - ... - a_0``, so ``det(X I - C) = P``.
    """
    if P.degree < 1 or P.lc != 1:
        raise DomainError("companion matrix needs a monic non-constant polynomial")
    n = P.degree
    C: Matrix = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = Fraction(1)
    for i in range(n):
        C[i][n - 1] = -P[i]
    return C


def power_sums(P: Poly, m: int) -> List[Fraction]:
    """``sigma_k = trace(C(P)^k)`` for ``k = 0 .. m``."""
    C = companion_matrix(P)
    n = len(C)
    out = []
    power = identity(n)
    for _ in range(m + 1):
        out.append(sum((power[i][i] for i in range(n)), Fraction(0)))
        power = mat_mul(power, C)
    return out


def jacobi_hermite(P: Poly) -> JacobiHermiteData:
    """Jacobi-Hermite data of a monic squarefree polynomial.

    :param Poly P: Monic, squarefree, degree ``n >= 1``.
    :returns: ``C(P)``, ``sigma_0 .. sigma_{2n-2}`` and ``S(P)``.
    :rtype: JacobiHermiteData
    :raises DomainError: If ``P`` is not monic or has a repeated factor.
    """
    _validate_monic_squarefree(P)
    n = P.degree
    C = companion_matrix(P)
    sigma = power_sums(P, 2 * n - 2)
    S = [[sigma[i + j] for j in range(n)] for i in range(n)]
    return JacobiHermiteData(
        tuple(tuple(r) for r in C),
        tuple(sigma),
        EpsSymMatrix.of(S),
    )


def hermite_matrix(P: Poly, t) -> EpsSymMatrix:
    """``S(P) (t I - C(P))``, symmetric because ``S(P) C(P) = C(P)^T S(P)``."""
    data = jacobi_hermite(P)
    S = data.hermite.rows()
    C = data.companion_rows()
    if mat_mul(S, C) != mat_mul(transpose(C), S):
        raise DomainError("Hankel and companion matrices fail to commute as expected")
    n = len(C)
    shifted = mat_add(mat_scale(Fraction(t), identity(n)), mat_scale(Fraction(-1), C))
    return EpsSymMatrix.of(mat_mul(S, shifted))


def hermite_count(P: Poly, t) -> int:
    """``#{real roots < t} - #{real roots > t}`` as a signature.

    :raises DomainError: If ``t`` is a root of ``P``.
    """
    t = Fraction(t)
    if P.evaluate(t) == 0:
        raise DomainError(f"{t} is a root of the polynomial")
    return signature(hermite_matrix(P, t)).tau


def _validate_bezout_degrees(P: Poly, Q: Poly) -> None:
    if P.is_zero() or Q.is_zero():
        raise DomainError("Bezoutian needs nonzero polynomials")
    if not P.degree > Q.degree:
        raise DomainError("Bezoutian needs deg P > deg Q")


def bezoutian(P: Poly, Q: Poly) -> EpsSymMatrix:
    """Coefficient matrix of ``(P(X) Q(Y) - P(Y) Q(X)) / (X - Y)``.

    :param Poly P: Polynomial of degree ``n``.
    :param Poly Q: Nonzero polynomial of smaller degree.
    :returns: ``n x n`` symmetric matrix ``a`` with
        ``sum a_ij X^i Y^j`` equal to the quotient.
    :rtype: EpsSymMatrix
    :raises DomainError: On a degree violation.
    """
    _validate_bezout_degrees(P, Q)
    n = P.degree
    B: Matrix = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n + 1):
        for j in range(i):
            c = P[i] * Q[j] - P[j] * Q[i]
            if c == 0:
                continue
            # (X^i Y^j - X^j Y^i) / (X - Y) = sum_k X^(j+k) Y^(i-1-k)
            for k in range(i - j):
                B[j + k][i - 1 - k] += c
    return EpsSymMatrix.of(B)
