# src/signet/exact/cyclotomic.py
"""Cyclotomic polynomials and exact arithmetic in cyclotomic fields.

A :class:`CycNumber` is an element of ``Q(zeta_q)`` stored as a rational
polynomial in ``zeta_q`` reduced modulo the ``q``-th cyclotomic polynomial.
Operands with different conductors are embedded into ``Q(zeta_lcm)``.

Signs of real elements are decided by :func:`cyc_sign`: exact zero test
first, then interval evaluation of the canonical embedding
``zeta_q -> exp(2 pi i / q)`` with doubling precision until the enclosure
excludes zero.
"""

import logging
import threading
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Union

from mpmath.ctx_iv import MPIntervalContext

from signet import config
from signet.errors import DomainError, SingularError
from signet.exact.factor import prime_factors
from signet.exact.poly import Poly, poly_divmod, poly_xgcd

logger = logging.getLogger(__name__)

_local = threading.local()


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> Poly:
    """The ``q``-th cyclotomic polynomial.

    :param int q: Order, at least 1.
    :returns: Monic integer polynomial of degree ``phi(q)``.
    :rtype: Poly
    :raises DomainError: If ``q < 1``.
    """
    if not isinstance(q, int) or q < 1:
        raise DomainError("cyclotomic order must be a positive integer")
    out = Poly([-1] + [0] * (q - 1) + [1])
    for d in range(1, q):
        if q % d == 0:
            out = poly_divmod(out, cyclotomic_polynomial(d))[0]
    return out


def _reduce(rep: Poly, q: int) -> Poly:
    phi = cyclotomic_polynomial(q)
    if rep.degree < phi.degree:
        return rep
    return poly_divmod(rep, phi)[1]


@lru_cache(maxsize=None)
def _unit_trace(m: int) -> Fraction:
    """``Tr(zeta_m) / phi(m)``, which is ``mu(m) / phi(m)``."""
    factors = prime_factors(m) if m > 1 else {}
    if any(e > 1 for e in factors.values()):
        return Fraction(0)
    phi = 1
    for p in factors:
        phi *= p - 1
    return Fraction((-1) ** len(factors), phi)


def _normalized_trace(rep: Poly, q: int) -> Fraction:
    """Trace of ``rep(zeta_q)`` over the rationals divided by ``phi(q)``."""
    return sum((c * _unit_trace(q // gcd(k, q)) for k, c in enumerate(rep.coeffs) if c), Fraction(0))


def _power_map(rep: Poly, step: int, q: int) -> Poly:
    """``rep(X^step)`` reduced modulo ``Phi_q`` (exponents taken mod ``q``)."""
    cs = [Fraction(0)] * q
    for k, c in enumerate(rep.coeffs):
        if c:
            cs[(k * step) % q] += c
    return _reduce(Poly(cs), q)


class CycNumber:
    """Element of the cyclotomic field ``Q(zeta_q)``.

    :param int q: Conductor, at least 1.
    :param rep: Polynomial in ``zeta_q`` (Poly or coefficient sequence).
    """

    __slots__ = ("q", "rep")

    def __init__(self, q: int, rep=()):
        if not isinstance(q, int) or q < 1:
            raise DomainError("conductor must be a positive integer")
        p = rep if isinstance(rep, Poly) else Poly(rep)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "rep", _reduce(p, q))

    def __setattr__(self, name, value):
        raise AttributeError("CycNumber is immutable")

    @classmethod
    def zeta(cls, q: int, k: int = 1) -> "CycNumber":
        """``zeta_q ** k``."""
        return cls(q, _power_map(Poly.x(), k, q) if q > 1 else Poly((1,)))

    @classmethod
    def rational(cls, c: Union[int, Fraction], q: int = 1) -> "CycNumber":
        return cls(q, Poly((c,)))

    # -------------------- embeddings --------------------
    def embed(self, m: int) -> "CycNumber":
        """Same element viewed in ``Q(zeta_m)``; ``q`` must divide ``m``."""
        if m % self.q:
            raise DomainError(f"conductor {self.q} does not divide {m}")
        if m == self.q:
            return self
        return CycNumber(m, _power_map(self.rep, m // self.q, m))

    def _pair(self, other):
        if isinstance(other, CycNumber):
            m = lcm(self.q, other.q)
            return self.embed(m), other.embed(m)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self, CycNumber(self.q, Poly((other,)))
        return None, None

    # -------------------- field operations --------------------
    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycNumber(a.q, a.rep + b.rep)

    __radd__ = __add__

    def __neg__(self) -> "CycNumber":
        return CycNumber(self.q, -self.rep)

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycNumber(a.q, a.rep - b.rep)

    def __rsub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycNumber(a.q, b.rep - a.rep)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycNumber(self.q, self.rep * other)
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycNumber(a.q, a.rep * b.rep)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        """Multiplicative inverse via extended Euclid against ``Phi_q``.

        :raises SingularError: If the element is zero.
        """
        if self.rep.is_zero():
            raise SingularError("inverse of zero cyclotomic number")
        g, s, _ = poly_xgcd(self.rep, cyclotomic_polynomial(self.q))
        if g.degree != 0:
            raise SingularError("cyclotomic polynomial is not coprime to element")
        return CycNumber(self.q, s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise SingularError("division by zero")
            return CycNumber(self.q, self.rep / other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.inverse() * other
        return NotImplemented

    def conj(self) -> "CycNumber":
        """Complex conjugation ``zeta -> zeta^(q-1)``."""
        if self.q <= 2:
            return self
        return CycNumber(self.q, _power_map(self.rep, self.q - 1, self.q))

    # -------------------- predicates --------------------
    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __bool__(self) -> bool:
        return not self.rep.is_zero()

    def is_real(self) -> bool:
        return self.conj() == self

    def as_rational(self):
        """The rational value, or ``None`` when the element is irrational."""
        if self.rep.degree <= 0:
            return self.rep[0]
        return None

    def __eq__(self, other) -> bool:
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.rep == b.rep

    def __hash__(self) -> int:
        r = self.as_rational()
        if r is not None:
            return hash(r)
        # Normalized traces do not depend on the conductor used to store the element.
        return hash((_normalized_trace(self.rep, self.q), _normalized_trace((self * self).rep, self.q)))

    def __repr__(self) -> str:
        return f"CycNumber({self.q}, {self.rep!r})"

    def __str__(self) -> str:
        return f"[{self.rep}]_(zeta{self.q})"


# -------------------- sign certification --------------------
def interval_context(prec: int) -> MPIntervalContext:
    """Thread-local mpmath interval context set to ``prec`` bits."""
    ctx = getattr(_local, "ctx", None)
    if ctx is None:
        ctx = MPIntervalContext()
        _local.ctx = ctx
    ctx.prec = prec
    return ctx


def real_enclosure(x: CycNumber, prec: int):
    """Interval enclosure of the real part of ``x`` at ``prec`` bits."""
    ctx = interval_context(prec)
    total = ctx.mpf(0)
    for k, c in enumerate(x.rep.coeffs):
        if c == 0:
            continue
        term = ctx.mpf(c.numerator) / c.denominator
        if k:
            term = term * ctx.cos(2 * ctx.pi * k / x.q)
        total = total + term
    return total


def cyc_sign(x: CycNumber) -> int:
    """Exact sign of a real cyclotomic number.

    :param CycNumber x: Conjugation-fixed element.
    :returns: -1, 0 or +1.
    :rtype: int
    :raises DomainError: If ``x`` is not real, or the precision ceiling is hit.
    """
    if not x.is_real():
        raise DomainError("sign requested for a non-real cyclotomic number")
    if x.rep.is_zero():
        return 0
    r = x.as_rational()
    if r is not None:
        return 1 if r > 0 else -1
    prec = config.precision_start()
    ceiling = config.max_precision()
    while prec <= ceiling:
        value = real_enclosure(x, prec)
        if (value > 0) is True:
            return 1
        if (value < 0) is True:
            return -1
        logger.debug("cyc_sign: enclosure contains 0 at %d bits, doubling", prec)
        prec *= 2
    raise DomainError("precision ceiling reached while certifying a sign")


def evaluate_poly(P: Poly, x: CycNumber) -> CycNumber:
    """``P(x)`` for a rational polynomial ``P``, as an element of ``Q(zeta_q)``."""
    value = P.evaluate(x)
    if isinstance(value, CycNumber):
        return value
    return CycNumber.rational(value, x.q)
