# src/signet/sturm/roots.py
"""Real algebraic numbers: isolation, refinement and exact comparison."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from signet.errors import DomainError
from signet.exact.poly import Poly, poly_gcd, sign_at_ints, squarefree_part
from signet.exact.rational import fraction_to_str
from signet.sturm.chain import SturmSequence, count_roots, primitive_sturm_sequence, root_bound

logger = logging.getLogger(__name__)

# Split points tried in order, as fractions of the interval width.
_SPLITS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4))


@dataclass(frozen=True)
class RealAlgebraic:
    """A real root of a squarefree integer polynomial, isolated in ``[lo, hi]``.

    Either ``lo == hi`` is the root itself, or neither endpoint is a root
    and the polynomial changes sign across the interval.
    """

    minpoly: Poly
    lo: Fraction
    hi: Fraction

    @classmethod
    def from_rational(cls, r) -> "RealAlgebraic":
        r = Fraction(r)
        return cls(Poly((-r.numerator, r.denominator)), r, r)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def width(self) -> Fraction:
        return self.hi - self.lo

    def as_dict(self) -> dict:
        return {
            "minpoly": [str(c) for c in self.minpoly.primitive_ints()],
            "interval": [fraction_to_str(self.lo), fraction_to_str(self.hi)],
        }


def _integer_form(P: Poly) -> Poly:
    ints = P.primitive_ints()
    if ints and ints[-1] < 0:
        ints = tuple(-c for c in ints)
    return Poly(ints)


def _split_point(row: Tuple[int, ...], lo: Fraction, hi: Fraction) -> Fraction:
    for t in _SPLITS:
        m = lo + (hi - lo) * t
        if sign_at_ints(row, m) != 0:
            return m
    # A polynomial of degree d has at most d roots; keep trying finer splits.
    k = 5
    while True:
        m = lo + (hi - lo) / k
        if sign_at_ints(row, m) != 0:
            return m
        k += 1


def _isolate(
    row: Tuple[int, ...],
    chain: SturmSequence,
    lo: Fraction,
    hi: Fraction,
    v_lo: int,
    v_hi: int,
    depth: int,
    out: List[Tuple[Fraction, Fraction]],
):
    """Bisect ``[lo, hi]`` until each piece holds one root; ``v_lo``, ``v_hi`` are the end variations."""
    n = v_lo - v_hi
    if n == 0:
        return
    if n == 1:
        logger.debug("isolate_roots: isolated a root in [%s, %s] at depth %d", lo, hi, depth)
        out.append((lo, hi))
        return
    m = _split_point(row, lo, hi)
    v_m = chain.variations_at(m)
    _isolate(row, chain, lo, m, v_lo, v_m, depth + 1, out)
    _isolate(row, chain, m, hi, v_m, v_hi, depth + 1, out)


def isolate_roots(P: Poly) -> List[RealAlgebraic]:
    """Disjoint isolating intervals for the distinct real roots of ``P``.

    Bisection starts from the Cauchy bound and never splits at a root, so
    every interval endpoint is a non-root.

    :param Poly P: Nonzero polynomial.
    :returns: Roots sorted increasingly.
    :rtype: List[RealAlgebraic]
    :raises DomainError: If ``P`` is zero.
    """
    if P.is_zero():
        raise DomainError("cannot isolate the roots of the zero polynomial")
    S = squarefree_part(P)
    if S.degree < 1:
        return []
    B = root_bound(S)
    chain = primitive_sturm_sequence(S)
    found: List[Tuple[Fraction, Fraction]] = []
    minpoly = _integer_form(S)
    _isolate(minpoly.primitive_ints(), chain, -B, B, chain.variations_at(-B), chain.variations_at(B), 0, found)
    return [RealAlgebraic(minpoly, lo, hi) for lo, hi in found]


def _bisect(x: RealAlgebraic) -> RealAlgebraic:
    if x.is_exact:
        return x
    P = x.minpoly
    row = P.primitive_ints()
    m = (x.lo + x.hi) / 2
    vm = sign_at_ints(row, m)
    if vm == 0:
        return RealAlgebraic(P, m, m)
    if sign_at_ints(row, x.lo) != vm:
        return RealAlgebraic(P, x.lo, m)
    return RealAlgebraic(P, m, x.hi)


def refine(x: RealAlgebraic, width) -> RealAlgebraic:
    """Bisect the isolating interval until it is at most ``width`` wide.

    :raises DomainError: If ``width`` is not positive.
    """
    width = Fraction(width)
    if width <= 0:
        raise DomainError("refinement width must be positive")
    while x.width() > width:
        x = _bisect(x)
    return x


def _roots_in(P: Poly, lo: Fraction, hi: Fraction) -> int:
    if lo == hi:
        return int(P.evaluate(lo) == 0)
    return count_roots(P, lo, hi)


def ra_compare(x: RealAlgebraic, y: RealAlgebraic) -> int:
    """Exact order of two real algebraic numbers.

    Equality is decided through the gcd of the defining polynomials: ``x``
    and ``y`` coincide exactly when both are roots of the gcd and the gcd has
    a single root on the union of their intervals. Otherwise the intervals
    are refined until they separate.

    :returns: -1, 0 or +1 for ``x < y``, ``x == y``, ``x > y``.
    :rtype: int
    """
    g = poly_gcd(x.minpoly, y.minpoly)
    shared = False
    if g.degree >= 1:
        on_x = _roots_in(g, x.lo, x.hi) == 1
        on_y = _roots_in(g, y.lo, y.hi) == 1
        if on_x and on_y:
            shared = True
    while True:
        if x.hi < y.lo:
            return -1
        if y.hi < x.lo:
            return 1
        if shared and _roots_in(g, min(x.lo, y.lo), max(x.hi, y.hi)) == 1:
            return 0
        x, y = _bisect(x), _bisect(y)
