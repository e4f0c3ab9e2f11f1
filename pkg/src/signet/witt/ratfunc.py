# src/signet/witt/ratfunc.py
"""Witt classes over the rational function field, modelled on ``Q(X)``.

A nonsingular symmetric matrix over ``Q(X)`` defines the sign function
``x -> tau(S(x))``, constant between the real zeros and poles of its
diagonal entries. Its class is recorded as the signature at ``+inf``, the
half-jumps of the sign function at real points, and the parity of every
irreducible factor with a non-real root.

Residues at an irreducible ``pi`` live in ``W(Q[X]/pi)``; Witt equality of
residues is decided for ``deg pi <= 2``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Sequence, Tuple

from signet.errors import DomainError, SingularError
from signet.exact.factor import factor_poly, is_irreducible
from signet.exact.poly import Poly, poly_divmod, poly_xgcd, squarefree_part
from signet.exact.ratfunc import RatFunc
from signet.exact.rational import sign
from signet.forms.diagonalize import lagrange_reduce
from signet.forms.matrix import as_form
from signet.forms.signature import signature
from signet.sturm.chain import count_real_roots
from signet.sturm.roots import RealAlgebraic, isolate_roots, ra_compare
from signet.witt.rational import witt_class_of_diagonal

logger = logging.getLogger(__name__)


def _as_ratfunc(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc(x)


def ratfunc_diagonal(S) -> List[RatFunc]:
    """Diagonal of a Lagrange reduction over ``Q(X)``.

    :raises SingularError: If ``det S = 0`` in ``Q(X)``.
    """
    form = as_form(S)
    if form.epsilon != 1 or form.field == "Q(zeta)":
        raise DomainError("expected a symmetric matrix over Q(X)")
    _, D = lagrange_reduce([[_as_ratfunc(x) for x in row] for row in form.rows()])
    if any(d == 0 for d in D):
        raise SingularError("form is singular over Q(X)")
    return [_as_ratfunc(d) for d in D]


@dataclass(frozen=True, eq=False)
class WittClassRX:
    """Signature at infinity, real half-jumps and parities at non-real factors."""

    tau_inf: int
    real_part: Tuple[Tuple[RealAlgebraic, int], ...]
    h_part: Tuple[Tuple[Poly, int], ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, WittClassRX):
            return NotImplemented
        if self.tau_inf != other.tau_inf or self.h_part != other.h_part:
            return False
        if len(self.real_part) != len(other.real_part):
            return False
        for (x, j), (y, k) in zip(self.real_part, other.real_part):
            if j != k or ra_compare(x, y) != 0:
                return False
        return True

    __hash__ = None

    def is_zero(self) -> bool:
        return self.tau_inf == 0 and not self.real_part and not self.h_part


def _critical_polynomial(D: Sequence[RatFunc]) -> Poly:
    out = Poly((1,))
    for d in D:
        for P in (d.num, d.den):
            if P.degree >= 1:
                out = squarefree_part(out * squarefree_part(P))
    return out


def _sign_function(D: Sequence[RatFunc], x: Fraction) -> int:
    return sum(sign(d.evaluate(x)) for d in D)


def _sample_points(roots: Sequence[RealAlgebraic]) -> List[Fraction]:
    """One rational point left of, between and right of the isolated roots."""
    if not roots:
        return [Fraction(0)]
    return [roots[0].lo] + [r.hi for r in roots]


def _h_part(D: Sequence[RatFunc]) -> Tuple[Tuple[Poly, int], ...]:
    parity: Dict[Poly, int] = {}
    for d in D:
        for P in (d.num, d.den):
            if P.degree < 1:
                continue
            for f, k in factor_poly(P):
                parity[f] = parity.get(f, 0) ^ (k % 2)
    out = []
    for f, bit in parity.items():
        if bit and count_real_roots(f) < f.degree:
            out.append((f, 1))
    out.sort(key=lambda fb: (fb[0].degree, fb[0].coeffs))
    return tuple(out)


def witt_rx(S) -> WittClassRX:
    """Witt class of a nonsingular symmetric matrix over ``Q(X)``.

    The sign function is read off the diagonal entries at rational sample
    points separating the real zeros and poles of those entries.

    :returns: ``tau_inf``, nonzero half-jumps at real points (sorted) and
        the non-real irreducible factors of odd multiplicity in ``det S``.
    :rtype: WittClassRX
    :raises SingularError: If ``det S = 0``.
    """
    D = ratfunc_diagonal(S)
    tau_inf = sum(d.sign_at_infinity() for d in D)
    C = _critical_polynomial(D)
    roots = isolate_roots(C) if C.degree >= 1 else []
    samples = _sample_points(roots)
    values = [_sign_function(D, x) for x in samples]
    logger.debug("witt_rx: %d real support candidates, plateaus %s", len(roots), values)
    real = []
    for k, r in enumerate(roots):
        jump = values[k + 1] - values[k]
        if jump:
            real.append((r, jump // 2))
    return WittClassRX(tau_inf, tuple(real), _h_part(D))


def witt_rx_sample(S, x) -> int:
    """``tau(S(x))`` at a rational point, the sign function of the class.

    :raises SingularError: If ``x`` is a pole of some entry.
    """
    return signature(as_form(S).evaluate(Fraction(x))).tau


# -------------------- residues --------------------
def _valuation(P: Poly, pi: Poly) -> Tuple[int, Poly]:
    k = 0
    while True:
        q, r = poly_divmod(P, pi)
        if not r.is_zero():
            return k, P
        P, k = q, k + 1


def _reduce_mod(P: Poly, pi: Poly) -> Poly:
    return poly_divmod(P, pi)[1]


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def is_square_mod(w: Poly, pi: Poly) -> bool:
    """Whether ``w`` is a square in ``Q[X]/pi`` for ``pi`` irreducible of degree 1 or 2."""
    w = _reduce_mod(w, pi)
    if w.is_zero():
        return True
    if pi.degree == 1:
        return _is_rational_square(w[0])
    if pi.degree != 2:
        raise DomainError("square test supports residue fields of degree at most 2")
    m = pi.monic()
    b, c = m[1], m[0]
    D = b * b - 4 * c
    # w = alpha + beta t with t = (-b + sqrt(D)) / 2, i.e. A + B sqrt(D).
    alpha, beta = w[0], w[1]
    A, B = alpha - beta * b / 2, beta / 2
    if B == 0:
        return _is_rational_square(A) or _is_rational_square(A / D)
    N = A * A - D * B * B
    if not _is_rational_square(N):
        return False
    n = Fraction(isqrt(N.numerator), isqrt(N.denominator))
    return any(_is_rational_square((A + s) / 2) and (A + s) != 0 for s in (n, -n))


@dataclass(frozen=True)
class ResidueClass:
    """``<u_1, ..., u_r>`` over ``Q[X]/pi``, entries reduced modulo ``pi``."""

    pi: Poly
    entries: Tuple[Poly, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def _rational_entries(self) -> List[Fraction]:
        return [u[0] for u in self.entries]

    def _cancelled(self, entries: Sequence[Poly]) -> List[Poly]:
        pool = list(entries)
        out: List[Poly] = []
        while pool:
            u = pool.pop(0)
            mate = next((i for i, v in enumerate(pool) if is_square_mod(-u * v, self.pi)), None)
            if mate is None:
                out.append(u)
            else:
                pool.pop(mate)
        return out

    def witt_equal(self, other: "ResidueClass") -> bool:
        """Witt equality in ``W(Q[X]/pi)``.

        :raises DomainError: For ``deg pi > 2`` or when the difference keeps
            rank above 2 after cancelling hyperbolic pairs over a quadratic field.
        """
        if self.pi != other.pi:
            raise DomainError("residue classes live over different fields")
        if self.pi.degree == 1:
            mine, theirs = self._rational_entries(), other._rational_entries()
            return witt_class_of_diagonal(mine) == witt_class_of_diagonal(theirs)
        if self.pi.degree != 2:
            raise DomainError("Witt equality is supported for residue fields of degree at most 2")
        rest = self._cancelled(list(self.entries) + [_reduce_mod(-u, self.pi) for u in other.entries])
        if not rest:
            return True
        if len(rest) % 2 or len(rest) == 2:
            # Odd rank, or an anisotropic binary form.
            return False
        raise DomainError("Witt equality over a quadratic field needs rank at most 2 after cancellation")

    def is_zero(self) -> bool:
        return self.witt_equal(ResidueClass(self.pi, ()))


def _unit_mod(num: Poly, den: Poly, pi: Poly) -> Poly:
    """``num / den`` in ``Q[X]/pi`` for ``den`` coprime to ``pi``."""
    g, s, _ = poly_xgcd(den, pi)
    if g.degree != 0:
        raise SingularError("denominator is not a unit modulo pi")
    return _reduce_mod(num * s, pi)


def residue(S, pi: Poly) -> ResidueClass:
    """Residue of a nonsingular symmetric matrix over ``Q(X)`` at an irreducible ``pi``.

    Each diagonal entry ``f = pi^m u`` with ``pi`` prime to ``u``
    contributes ``<u mod pi>`` when ``m`` is odd.

    :raises DomainError: If ``pi`` is reducible over the rationals.
    :raises SingularError: If ``det S = 0``.
    """
    if not is_irreducible(pi):
        raise DomainError("residue needs an irreducible polynomial")
    pi = pi.monic()
    out = []
    for d in ratfunc_diagonal(S):
        mn, num = _valuation(d.num, pi)
        md, den = _valuation(d.den, pi)
        if (mn - md) % 2:
            out.append(_unit_mod(num, den, pi))
    return ResidueClass(pi, tuple(out))
