# src/signet/sturm/chain.py
"""Sturm chains and exact real root counting.

The chain of a polynomial ``P`` is the Euclidean algorithm with a change
of sign: ``P_0 = P``, ``P_1 = P'`` and ``P_{k+1} = P_k Q_k - P_{k-1}``,
stopping at the last nonzero remainder.

Counting only needs the signs of the chain, so :func:`count_roots` and the
root isolation in :mod:`signet.sturm.roots` use the primitive sequence,
where every element is a positive integer multiple of the exact remainder.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from signet.errors import DomainError
from signet.exact.poly import Poly, poly_divmod, poly_gcd, primitive_remainder, sign_at_ints, squarefree_part
from signet.exact.rational import sign

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SturmSequence:
    """Remainders ``P_0 .. P_n`` of a Sturm sequence, up to positive factors."""

    remainders: Tuple[Poly, ...]
    _rows: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_rows", tuple(P.primitive_ints() for P in self.remainders))

    def values_at(self, a) -> List[Fraction]:
        return [P.evaluate(a) for P in self.remainders]

    def signs_at(self, a) -> List[int]:
        a = Fraction(a)
        return [sign_at_ints(row, a) for row in self._rows]

    def variations_at(self, a) -> int:
        return sign_variations(self.signs_at(a))

    def variations_at_infinity(self, direction: int = 1) -> int:
        """Variations as ``X -> +inf`` (``direction = 1``) or ``-inf``."""
        signs = []
        for P in self.remainders:
            s = sign(P.lc)
            if direction < 0 and P.degree % 2:
                s = -s
            signs.append(s)
        return sign_variations(signs)


@dataclass(frozen=True)
class SturmChain(SturmSequence):
    """Remainders ``P_0 .. P_n`` and quotients ``Q_1 .. Q_n``."""

    quotients: Tuple[Poly, ...]

    @property
    def length(self) -> int:
        """``n``, the number of quotients."""
        return len(self.quotients)


def sign_variations(values: Sequence[object]) -> int:
    """Sign changes in a sequence, skipping zeros."""
    signs = [sign(v) for v in values]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _validate_nonconstant(P: Poly) -> None:
    if not isinstance(P, Poly):
        raise DomainError("expected a polynomial")
    if P.degree < 1:
        raise DomainError("Sturm chain needs a non-constant polynomial")


def sturm_chain(P: Poly) -> SturmChain:
    """Sturm chain of ``P``.

    :param Poly P: Polynomial of degree at least 1. For a squarefree ``P``
        the last remainder is a nonzero constant.
    :returns: Remainders and quotients with ``P_{k+1} = P_k Q_k - P_{k-1}``.
    :rtype: SturmChain
    :raises DomainError: If ``P`` is constant or zero.
    """
    _validate_nonconstant(P)
    rems = [P, P.derivative()]
    quots = []
    while True:
        q, r = poly_divmod(rems[-2], rems[-1])
        quots.append(q)
        if r.is_zero():
            break
        rems.append(-r)
    return SturmChain(tuple(rems), tuple(quots))


def primitive_sturm_sequence(P: Poly) -> SturmSequence:
    """Sturm sequence of ``P`` as primitive integer polynomials.

    Each element is a positive multiple of the matching remainder of
    :func:`sturm_chain`, so signs and variation counts agree at every
    point, while coefficient sizes stay linear in the degree.

    :raises DomainError: If ``P`` is constant or zero.
    """
    _validate_nonconstant(P)
    rems = [Poly(P.primitive_ints()), Poly(P.derivative().primitive_ints())]
    while True:
        r = primitive_remainder(rems[-2], rems[-1])
        if r.is_zero():
            break
        rems.append(-r)
    logger.debug("primitive_sturm_sequence: degree %d, %d elements", P.degree, len(rems))
    return SturmSequence(tuple(rems))


def root_bound(P: Poly) -> Fraction:
    """Cauchy bound ``1 + max |c_i| / |c_n|``: every root has smaller modulus."""
    if P.degree < 1:
        return Fraction(1)
    lc = abs(P.lc)
    return 1 + max(abs(c) for c in P.coeffs[:-1]) / lc


def is_regular(P: Poly) -> bool:
    """True when ``P`` has no repeated factor."""
    return P.degree >= 1 and poly_gcd(P, P.derivative()).degree == 0


def count_roots(P: Poly, a, b) -> int:
    """Number of distinct real roots of ``P`` in the closed interval ``[a, b]``.

    ``P`` is replaced by its squarefree part first. With zeros skipped, the
    variation difference ``V(a) - V(b)`` counts the roots in ``(a, b]``; a
    root at ``a`` itself is added back.

    :param Poly P: Nonzero polynomial.
    :param a: Left endpoint (Fraction, int or ``"p/q"``).
    :param b: Right endpoint, ``a < b``.
    :returns: Exact count.
    :rtype: int
    :raises DomainError: If ``a >= b`` or ``P`` is zero.
    """
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise DomainError("count_roots needs a < b")
    S = squarefree_part(P)
    if S.degree < 1:
        return 0
    chain = primitive_sturm_sequence(S)
    count = chain.variations_at(a) - chain.variations_at(b)
    if S.evaluate(a) == 0:
        count += 1
    return count


def count_real_roots(P: Poly) -> int:
    """Number of distinct real roots of ``P``."""
    S = squarefree_part(P)
    if S.degree < 1:
        return 0
    chain = primitive_sturm_sequence(S)
    return chain.variations_at_infinity(-1) - chain.variations_at_infinity(1)
