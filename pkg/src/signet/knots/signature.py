# src/signet/knots/signature.py
"""Tristram-Levine signatures on the unit circle.

For ``omega`` on the unit circle the hermitian form
``(1 - omega) sigma + (1 - conj(omega)) sigma^T`` has a signature that is
locally constant away from the roots of the Alexander polynomial. The
upper half circle is parametrized by ``x = z + 1/z = 2 cos(angle)``; the
roots there are exact real algebraic numbers in ``(-2, 2)`` and each arc
between them is evaluated at a certified root of unity.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from signet import config
from signet.errors import DomainError, SingularError
from signet.exact.cyclotomic import CycNumber, interval_context
from signet.exact.poly import Poly, poly_divmod, poly_gcd, squarefree_part
from signet.forms.matrix import EpsSymMatrix
from signet.forms.signature import signature
from signet.knots.seifert import SeifertMatrix, as_seifert, alexander
from signet.sturm.roots import RealAlgebraic, isolate_roots, ra_compare, refine

logger = logging.getLogger(__name__)

MAX_CONDUCTOR = 420
MAX_REFINEMENTS = 40
_TWO = Fraction(2)


def omega_signature(s, a: int, q: int) -> int:
    """Signature of the hermitian form at ``omega = exp(2 pi i a / q)``.

    :param s: :class:`SeifertMatrix`, braid or square matrix.
    :param int a: Numerator, ``0 < a < q`` and coprime to ``q``.
    :param int q: Conductor, at least 2.
    :rtype: int
    :raises DomainError: On an invalid root of unity.
    :raises SingularError: If ``omega`` is a root of the Alexander polynomial.
    """
    if not isinstance(q, int) or q < 2 or not 0 < a < q or math.gcd(a, q) != 1:
        raise DomainError(f"exp(2 pi i {a}/{q}) is not a primitive root of unity other than 1")
    s = as_seifert(s)
    if s.size == 0:
        return 0
    omega = CycNumber.zeta(q, a)
    u, v = 1 - omega, 1 - omega.conj()
    rows = s.rows()
    form = [[u * rows[i][j] + v * rows[j][i] for j in range(s.size)] for i in range(s.size)]
    profile = signature(EpsSymMatrix.of(form))
    if profile.nullity:
        raise SingularError(f"exp(2 pi i {a}/{q}) is a root of the Alexander polynomial")
    return profile.tau


# -------------------- roots on the circle --------------------
def compact_form(P: Poly) -> Poly:
    """``p`` with ``P(z) = z^m p(z + 1/z)`` for a palindromic ``P`` of degree ``2m``.

    :raises DomainError: If ``P`` is not palindromic of even degree.
    """
    cs = P.coeffs
    d = P.degree
    if d < 0 or d % 2 or any(cs[k] != cs[d - k] for k in range(d + 1)):
        raise DomainError("compact form needs a palindromic polynomial of even degree")
    m = d // 2
    x = Poly.x()
    out = Poly((cs[m],))
    prev, cur = Poly((2,)), x
    for k in range(1, m + 1):
        out = out + cur * cs[m + k]
        prev, cur = cur, x * cur - prev
    return out


def _strip_unit_roots(G: Poly) -> Poly:
    for root in (1, -1):
        if G.degree >= 1 and G.evaluate(root) == 0:
            G = poly_divmod(G, Poly((-root, 1)))[0]
    return G


def circle_roots(delta: Poly) -> List[RealAlgebraic]:
    """Roots ``x = 2 cos(angle)`` of ``delta`` on the open upper half circle.

    :returns: Sorted by increasing angle, that is decreasing ``x``.
    :raises SingularError: If ``delta`` is zero.
    """
    if delta.is_zero():
        raise SingularError("Alexander polynomial vanishes identically")
    G = _strip_unit_roots(squarefree_part(poly_gcd(delta, delta.reversed())).monic())
    if G.degree < 1:
        return []
    lo, hi = RealAlgebraic.from_rational(-2), RealAlgebraic.from_rational(2)
    inside = [r for r in isolate_roots(compact_form(G)) if ra_compare(r, lo) > 0 and ra_compare(r, hi) < 0]
    return list(reversed(inside))


# -------------------- sample points --------------------
def _certified_between(a: int, q: int, lo: Fraction, hi: Fraction) -> bool:
    prec = config.precision_start()
    while prec <= config.max_precision():
        ctx = interval_context(prec)
        x = 2 * ctx.cos(2 * ctx.pi * a / q)
        above = x > ctx.mpf(lo.numerator) / lo.denominator
        below = x < ctx.mpf(hi.numerator) / hi.denominator
        if above is False or below is False:
            return False
        if above is True and below is True:
            return True
        prec *= 2
    return False


def sample_angle(lo: Fraction, hi: Fraction, max_conductor: int = MAX_CONDUCTOR) -> Optional[Tuple[int, int]]:
    """Smallest-conductor ``(a, q)`` with ``lo < 2 cos(2 pi a / q) < hi`` and ``0 < 2a < q``.

    :returns: ``None`` when no conductor up to ``max_conductor`` fits.
    """
    if lo >= hi:
        return None
    for q in range(3, max_conductor + 1):
        for a in range(1, (q + 1) // 2):
            if math.gcd(a, q) != 1:
                continue
            x = 2 * math.cos(2 * math.pi * a / q)
            if float(lo) - 1e-12 < x < float(hi) + 1e-12 and _certified_between(a, q, lo, hi):
                return a, q
    return None


def _gap(roots: List[RealAlgebraic], k: int) -> Tuple[Fraction, Fraction]:
    lo = -_TWO if k == len(roots) else roots[k].hi
    hi = _TWO if k == 0 else roots[k - 1].lo
    return lo, hi


def _arc_samples(roots: List[RealAlgebraic]) -> List[Tuple[int, int]]:
    samples = []
    for k in range(len(roots) + 1):
        found = None
        for _ in range(MAX_REFINEMENTS):
            found = sample_angle(*_gap(roots, k))
            if found is not None:
                break
            for j in (k - 1, k):
                if 0 <= j < len(roots) and not roots[j].is_exact:
                    roots[j] = refine(roots[j], roots[j].width() / 2)
        if found is None:
            raise DomainError(f"no root of unity of conductor at most {MAX_CONDUCTOR} separates arc {k}")
        samples.append(found)
    return samples


# -------------------- the step function --------------------
@dataclass(frozen=True)
class SignatureFunction:
    """Step function on the upper half circle.

    ``breakpoints[k]`` separates ``plateaus[k]`` from ``plateaus[k + 1]``;
    ``samples[k] = (a, q)`` is the root of unity the plateau was read at.
    """

    breakpoints: Tuple[RealAlgebraic, ...]
    plateaus: Tuple[int, ...]
    samples: Tuple[Tuple[int, int], ...]

    def jumps(self) -> List[int]:
        return [b - a for a, b in zip(self.plateaus, self.plateaus[1:])]

    def as_dict(self) -> dict:
        return {
            "breakpoints": [r.as_dict() for r in self.breakpoints],
            "plateaus": list(self.plateaus),
            "samples": [[a, q] for a, q in self.samples],
        }


def signature_function(s, jobs: int = 1) -> SignatureFunction:
    """Breakpoints and plateau values of ``omega -> sigma_omega``.

    :param s: :class:`SeifertMatrix`, braid or square matrix.
    :param int jobs: Worker threads for the plateau evaluations.
    :rtype: SignatureFunction
    :raises SingularError: If the Alexander polynomial is zero.
    :raises DomainError: If an arc is too short for the sample search.
    """
    s: SeifertMatrix = as_seifert(s)
    roots = circle_roots(alexander(s))
    samples = _arc_samples(roots)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            plateaus = list(pool.map(lambda aq: omega_signature(s, *aq), samples))
    else:
        plateaus = [omega_signature(s, a, q) for a, q in samples]
    logger.debug("signature_function: %d breakpoints, plateaus %s", len(roots), plateaus)
    return SignatureFunction(tuple(roots), tuple(plateaus), tuple(samples))


def milnor_signatures(sf: SignatureFunction) -> List[Tuple[RealAlgebraic, Fraction]]:
    """Half-jumps at each breakpoint."""
    return [(r, Fraction(j, 2)) for r, j in zip(sf.breakpoints, sf.jumps())]
