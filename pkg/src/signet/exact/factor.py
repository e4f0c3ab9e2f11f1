# src/signet/exact/factor.py
"""Factorization of integers and rational polynomials, backed by sympy.

sympy is used only at this boundary; everything returned is built from
:class:`~fractions.Fraction` and :class:`~signet.exact.poly.Poly`.
"""

from fractions import Fraction
from typing import Dict, List, Tuple

import sympy

from signet.errors import DomainError, SingularError
from signet.exact.poly import Poly

_X = sympy.Symbol("X")


def to_sympy(P: Poly) -> sympy.Poly:
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(P.coeffs)] or [0]
    return sympy.Poly(coeffs, _X, domain="QQ")


def from_sympy(p: sympy.Poly) -> Poly:
    out = []
    for c in reversed(p.all_coeffs()):
        r = sympy.Rational(c)
        out.append(Fraction(int(r.p), int(r.q)))
    return Poly(out)


def factor_poly(P: Poly) -> List[Tuple[Poly, int]]:
    """Monic irreducible factors of ``P`` over the rationals, with multiplicities.

    Factors are sorted by degree, then by coefficients.

    :raises DomainError: If ``P`` is zero.
    """
    if P.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    if P.degree < 1:
        return []
    _, factors = to_sympy(P).factor_list()
    out = [(from_sympy(f).monic(), int(k)) for f, k in factors]
    out.sort(key=lambda fk: (fk[0].degree, fk[0].coeffs))
    return out


def is_irreducible(P: Poly) -> bool:
    if P.degree < 1:
        return False
    factors = factor_poly(P)
    return len(factors) == 1 and factors[0][1] == 1


def squarefree_core(x) -> int:
    """The squarefree integer in the rational square class of ``x``.

    :raises SingularError: If ``x`` is zero.
    """
    x = Fraction(x)
    if x == 0:
        raise SingularError("zero has no square class")
    n = x.numerator * x.denominator
    core = -1 if n < 0 else 1
    for p, e in sympy.factorint(abs(n)).items():
        if e % 2:
            core *= int(p)
    return core


def prime_factors(n: int) -> Dict[int, int]:
    """Prime factorization of a nonzero integer's absolute value."""
    if n == 0:
        raise DomainError("zero has no prime factorization")
    return {int(p): int(e) for p, e in sympy.factorint(abs(n)).items()}
