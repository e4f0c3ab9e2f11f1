# src/signet/forms/lpoly.py
"""Hirzebruch L-polynomials from the multiplicative sequence of sqrt(x)/tanh(sqrt(x)).

Writing ``Q(x) = sum b_k x^k`` for the characteristic power series, the
total L-class is ``prod_i Q(x_i)`` with the Pontrjagin classes ``p_j`` the
elementary symmetric functions of the ``x_i``. We take ``log Q``, express
the power sums ``s_m = sum_i x_i^m`` through Newton's identities in the
``p_j``, and exponentiate in the graded ring truncated at weight ``k``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Sequence, Tuple

import sympy

from signet.errors import DomainError
from signet.exact.rational import fraction_to_str

MAX_K = 10

Monomial = Tuple[int, ...]
Graded = Dict[Monomial, Fraction]


@dataclass(frozen=True)
class LPolynomial:
    """``L_k`` as a map from exponent vectors of ``(p_1, ..., p_k)`` to coefficients."""

    k: int
    terms: Tuple[Tuple[Monomial, Fraction], ...]

    def as_dict(self) -> Dict[Monomial, Fraction]:
        return dict(self.terms)

    def coefficient(self, **powers: int) -> Fraction:
        """Coefficient of e.g. ``p1=2, p2=1``; missing generators have power 0."""
        mono = [0] * self.k
        for name, e in powers.items():
            if not name.startswith("p") or not name[1:].isdigit():
                raise DomainError(f"bad generator name {name!r}")
            j = int(name[1:])
            if not 1 <= j <= self.k:
                raise DomainError(f"generator {name} out of range for L_{self.k}")
            mono[j - 1] = e
        return self.as_dict().get(tuple(mono), Fraction(0))

    def evaluate(self, pontrjagin: Sequence[object]) -> Fraction:
        """Value at rational Pontrjagin numbers ``(p_1, ..., p_k)``."""
        if len(pontrjagin) != self.k:
            raise DomainError(f"expected {self.k} Pontrjagin numbers")
        ps = [Fraction(x) for x in pontrjagin]
        total = Fraction(0)
        for mono, c in self.terms:
            term = c
            for p, e in zip(ps, mono):
                term *= p**e
            total += term
        return total

    def __str__(self) -> str:
        parts = []
        for mono, c in self.terms:
            factors = []
            for j, e in enumerate(mono, start=1):
                if e == 1:
                    factors.append(f"p{j}")
                elif e > 1:
                    factors.append(f"p{j}^{e}")
            parts.append(f"{fraction_to_str(c)}*{'*'.join(factors)}")
        return " + ".join(parts).replace("+ -", "- ")


# -------------------- graded polynomial ring --------------------
def _weight(mono: Monomial) -> int:
    return sum((j + 1) * e for j, e in enumerate(mono))


def _mul(a: Graded, b: Graded, k: int) -> Graded:
    out: Graded = {}
    for ma, ca in a.items():
        wa = _weight(ma)
        for mb, cb in b.items():
            if wa + _weight(mb) > k:
                continue
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, Fraction(0)) + ca * cb
    return {m: c for m, c in out.items() if c != 0}


def _add(a: Graded, b: Graded, scale: Fraction = Fraction(1)) -> Graded:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, Fraction(0)) + scale * c
    return {m: c for m, c in out.items() if c != 0}


def _series_coefficients(k: int) -> list:
    """``b_0 .. b_k`` of ``sqrt(x)/tanh(sqrt(x))``: ``b_j = 4^j B_2j / (2j)!``."""
    out = []
    for j in range(k + 1):
        B = sympy.bernoulli(2 * j)
        out.append(Fraction(4**j) * Fraction(int(B.p), int(B.q)) / factorial(2 * j))
    return out


def _log_coefficients(b: list) -> list:
    """Coefficients ``c_1 .. c_k`` of ``log Q`` (``c[0]`` unused)."""
    k = len(b) - 1
    c = [Fraction(0)] * (k + 1)
    for m in range(1, k + 1):
        acc = m * b[m]
        for j in range(1, m):
            acc -= j * c[j] * b[m - j]
        c[m] = acc / m
    return c


def _power_sums(k: int) -> list:
    """Newton's identities: ``s_m`` as graded polynomials in ``p_1..p_k``."""
    def gen(j: int) -> Graded:
        mono = [0] * k
        mono[j - 1] = 1
        return {tuple(mono): Fraction(1)}

    s: list = [None]
    for m in range(1, k + 1):
        acc: Graded = {}
        acc = _add(acc, gen(m), Fraction((-1) ** (m - 1) * m))
        for i in range(1, m):
            acc = _add(acc, _mul(gen(i), s[m - i], k), Fraction((-1) ** (i - 1)))
        s.append(acc)
    return s


@lru_cache(maxsize=None)
def l_polynomial(k: int) -> LPolynomial:
    """The ``k``-th Hirzebruch L-polynomial.

    :param int k: Degree, ``1 <= k <= 10``.
    :returns: ``L_k`` with exact rational coefficients.
    :rtype: LPolynomial
    :raises DomainError: If ``k`` is out of range.
    """
    if not isinstance(k, int) or not 1 <= k <= MAX_K:
        raise DomainError(f"L-polynomial degree must be in 1..{MAX_K}")
    c = _log_coefficients(_series_coefficients(k))
    s = _power_sums(k)
    log_total: Graded = {}
    for m in range(1, k + 1):
        log_total = _add(log_total, s[m], c[m])
    # exp(f) = sum f^n / n!, f has no constant term so n <= k suffices.
    total: Graded = {tuple([0] * k): Fraction(1)}
    power: Graded = {tuple([0] * k): Fraction(1)}
    for n in range(1, k + 1):
        power = _mul(power, log_total, k)
        total = _add(total, power, Fraction(1, factorial(n)))
    terms = sorted(
        ((m, c) for m, c in total.items() if _weight(m) == k),
        key=lambda t: tuple(reversed(t[0])),
        reverse=True,
    )
    return LPolynomial(k, tuple(terms))


def l_genus_check(k: int, pontrjagin: Sequence[object]) -> Fraction:
    """Evaluate ``L_k`` on rational Pontrjagin numbers.

    For a closed oriented ``4k``-manifold the value is its signature, e.g.
    ``l_genus_check(1, [3]) == 1`` for the complex projective plane.
    """
    return l_polynomial(k).evaluate(pontrjagin)
