# src/signet/maslov/dedekind.py
"""Sawtooth function and Dedekind sums.

``((x)) = x - floor(x) - 1/2`` off the integers and 0 on them, and
``s(a, c) = sum_{k=1}^{|c|-1} ((k/c)) ((ka/c))``. Coprime arguments go
through reciprocity; the literal sum is kept for cross-checks and for
non-coprime input. The cotangent form is evaluated in mpmath intervals.
"""

import logging
from fractions import Fraction
from math import floor, gcd

from signet import config
from signet.errors import DomainError
from signet.exact.cyclotomic import interval_context
from signet.exact.rational import to_fraction

logger = logging.getLogger(__name__)

DEFAULT_COT_WIDTH = Fraction(1, 10**9)


def sawtooth(x) -> Fraction:
    """``((x))``."""
    x = to_fraction(x) if isinstance(x, str) else Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def sawtooth_defect(x, y) -> Fraction:
    """``((x)) + ((y)) - ((x + y))``: 0, +-1/2 or +-1 off the integer cases."""
    x, y = Fraction(x), Fraction(y)
    return sawtooth(x) + sawtooth(y) - sawtooth(x + y)


def _validate_modulus(c) -> int:
    if isinstance(c, bool) or not isinstance(c, int):
        raise DomainError("dedekind sum needs integer arguments")
    if c == 0:
        raise DomainError("dedekind sum needs c != 0")
    return c


def dedekind_sum_direct(a: int, c: int) -> Fraction:
    """The defining sum, ``O(|c|)`` terms."""
    _validate_modulus(c)
    return sum((sawtooth(Fraction(k, c)) * sawtooth(Fraction(k * a, c)) for k in range(1, abs(c))), Fraction(0))


def _reciprocity(a: int, c: int) -> Fraction:
    """``s(a, c)`` for ``c > 0`` and ``gcd(a, c) = 1``."""
    total = Fraction(0)
    sgn = 1
    a %= c
    while c > 1:
        # s(a, c) + s(c, a) = (a/c + c/a + 1/(ac)) / 12 - 1/4
        total += sgn * (Fraction(a, c) + Fraction(c, a) + Fraction(1, a * c) - 3) / 12
        a, c = c % a, a
        sgn = -sgn
    return total


def dedekind_sum(a: int, c: int) -> Fraction:
    """``s(a, c)`` exactly.

    :param int a: Any integer.
    :param int c: Nonzero integer; ``s(a, -c) = s(a, c)``.
    :rtype: Fraction
    :raises DomainError: If ``c = 0``.
    """
    c = _validate_modulus(c)
    if isinstance(a, bool) or not isinstance(a, int):
        raise DomainError("dedekind sum needs integer arguments")
    if gcd(a, c) != 1:
        return dedekind_sum_direct(a, c)
    return _reciprocity(a, abs(c))


def dedekind_cot(a: int, c: int, prec: int = None):
    """``(1 / 4|c|) sum_k cot(pi k / c) cot(pi k a / c)`` as an mpmath interval.

    :raises DomainError: Unless ``gcd(a, c) = 1``; otherwise a cotangent has a pole.
    """
    c = _validate_modulus(c)
    if gcd(a, c) != 1:
        raise DomainError("cotangent form needs gcd(a, c) = 1")
    ctx = interval_context(prec or config.precision_start())
    total = ctx.mpf(0)
    for k in range(1, abs(c)):
        u = ctx.pi * k / c
        v = ctx.pi * (k * a % c) / c
        total = total + (ctx.cos(u) / ctx.sin(u)) * (ctx.cos(v) / ctx.sin(v))
    return total / (4 * abs(c))


def dedekind_cross_check(a: int, c: int, width: Fraction = DEFAULT_COT_WIDTH) -> bool:
    """Whether the exact ``s(a, c)`` lies in a cotangent enclosure narrower than ``width``.

    :raises DomainError: If the precision ceiling is reached first.
    """
    exact = dedekind_sum(a, c)
    prec = config.precision_start()
    while prec <= config.max_precision():
        ctx = interval_context(prec)
        value = dedekind_cot(a, c, prec)
        tol = ctx.mpf(width.numerator) / width.denominator
        if ((value.b - value.a) < tol) is True:
            target = ctx.mpf(exact.numerator) / exact.denominator
            return (value < target) is not True and (value > target) is not True
        logger.debug("dedekind_cross_check: enclosure too wide at %d bits", prec)
        prec *= 2
    raise DomainError("precision ceiling reached in the cotangent form")
