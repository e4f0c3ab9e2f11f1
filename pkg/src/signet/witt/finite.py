# src/signet/witt/finite.py
"""Witt classes over prime fields ``F_p``, ``p`` odd.

A class is determined by its rank mod 2 and its signed discriminant
``(-1)^(r(r-1)/2) det`` up to squares. When ``p = 3 mod 4`` the group is
cyclic of order 4, generated by ``<1>``, and ``z4 = sum legendre(a_i)`` is
a complete invariant.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import sympy

from signet.errors import DomainError


def _validate_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not sympy.isprime(p):
        raise DomainError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol of a unit mod ``p``."""
    return int(sympy.legendre_symbol(a % p, p))


@dataclass(frozen=True)
class WittClassFp:
    """Witt class in ``W(F_p)``.

    ``z4_value`` is present exactly when ``p = 3 mod 4``.
    """

    p: int
    r_mod2: int
    disc_is_square: bool
    z4_value: Optional[int] = None

    @classmethod
    def zero(cls, p: int) -> "WittClassFp":
        return cls(p, 0, True, 0 if p % 4 == 3 else None)

    def is_zero(self) -> bool:
        return self == WittClassFp.zero(self.p)

    def __add__(self, other: "WittClassFp") -> "WittClassFp":
        if not isinstance(other, WittClassFp):
            return NotImplemented
        if other.p != self.p:
            raise DomainError("cannot add Witt classes over different fields")
        p = self.p
        twist = legendre(-1, p) if self.r_mod2 and other.r_mod2 else 1
        square = (self.disc_is_square == other.disc_is_square) == (twist == 1)
        z4 = None if self.z4_value is None else (self.z4_value + other.z4_value) % 4
        return WittClassFp(p, self.r_mod2 ^ other.r_mod2, square, z4)

    def __neg__(self) -> "WittClassFp":
        flip = self.r_mod2 and legendre(-1, self.p) == -1
        z4 = None if self.z4_value is None else (-self.z4_value) % 4
        return WittClassFp(self.p, self.r_mod2, self.disc_is_square != bool(flip), z4)

    def __sub__(self, other: "WittClassFp") -> "WittClassFp":
        return self + (-other)


def witt_fp(diag: Sequence[int], p: int) -> WittClassFp:
    """Witt class of the diagonal form ``<a_1, ..., a_r>`` over ``F_p``.

    :param diag: Integers, nonzero mod ``p``.
    :param int p: Odd prime.
    :returns: Rank parity, signed-discriminant square class and, for
        ``p = 3 mod 4``, the ``Z/4`` value.
    :rtype: WittClassFp
    :raises DomainError: If ``p`` is not an odd prime or an entry is 0 mod ``p``.
    """
    _validate_odd_prime(p)
    entries = [int(a) % p for a in diag]
    if any(a == 0 for a in entries):
        raise DomainError(f"diagonal entry divisible by {p}")
    r = len(entries)
    disc = (-1) ** (r * (r - 1) // 2)
    for a in entries:
        disc = disc * a % p
    square = legendre(disc, p) == 1
    z4 = sum(legendre(a, p) for a in entries) % 4 if p % 4 == 3 else None
    return WittClassFp(p, r % 2, square, z4)
