# src/signet/sturm/contfrac.py
"""Improper continued fractions and tridiagonal symmetric matrices.

``[x_1, x_2, ..., x_n] = x_1 - 1/[x_2, ..., x_n]``. The tridiagonal matrix
``Tri(x)`` has diagonal ``x`` and ones beside it; its leading minors obey
``mu_k = x_k mu_{k-1} - mu_{k-2}`` and ``mu_k / mu_{k-1} = [x_k, ..., x_1]``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from signet.errors import DomainError, SingularError, UnsatisfiableError
from signet.exact.ratfunc import RatFunc
from signet.forms.linalg import Matrix, mat_mul, scalar
from signet.forms.matrix import EpsSymMatrix
from signet.sturm.chain import is_regular, sturm_chain

logger = logging.getLogger(__name__)

MODES = ("big-entry", "even")
MAX_EVEN_DEPTH = 64


@dataclass(frozen=True)
class ContinuedFraction:
    """Entries ``chi_1 .. chi_n`` of an improper continued fraction."""

    chi: Tuple[object, ...]

    @classmethod
    def of(cls, values: Sequence[object]) -> "ContinuedFraction":
        return cls(tuple(scalar(v) for v in values))

    def __len__(self) -> int:
        return len(self.chi)

    def __iter__(self) -> Iterator[object]:
        return iter(self.chi)

    def reversed(self) -> "ContinuedFraction":
        """``chi* = (chi_n, ..., chi_1)``."""
        return ContinuedFraction(tuple(reversed(self.chi)))

    def is_regular(self) -> bool:
        return all(m != 0 for m in tri_minors(self))


class CFValue(NamedTuple):
    """``value = numerator / denominator`` with both terms determinants of ``Tri``."""

    value: Fraction
    numerator: Fraction
    denominator: Fraction


def _as_cf(chi) -> ContinuedFraction:
    return chi if isinstance(chi, ContinuedFraction) else ContinuedFraction.of(chi)


def tri_minors(chi) -> List[object]:
    """``mu_0 .. mu_n`` of ``Tri(chi)`` by the three-term recurrence."""
    chi = _as_cf(chi)
    mus: List[object] = [Fraction(1)]
    prev = Fraction(0)
    for x in chi:
        mus.append(x * mus[-1] - prev)
        prev = mus[-2]
    return mus


def tri(chi) -> EpsSymMatrix:
    """The symmetric tridiagonal matrix with diagonal ``chi`` and unit off-diagonals."""
    chi = _as_cf(chi)
    n = len(chi)
    rows: Matrix = [[Fraction(0)] * n for _ in range(n)]
    for k, x in enumerate(chi):
        rows[k][k] = x
        if k + 1 < n:
            rows[k][k + 1] = Fraction(1)
            rows[k + 1][k] = Fraction(1)
    return EpsSymMatrix.of(rows)


def reverse_cf(chi) -> ContinuedFraction:
    return _as_cf(chi).reversed()


def cf_eval(chi) -> CFValue:
    """Value of ``[chi_1, ..., chi_n]``.

    :returns: The value together with ``det Tri(chi)`` and
        ``det Tri(chi_2, ..., chi_n)``.
    :rtype: CFValue
    :raises DomainError: On an empty sequence.
    :raises SingularError: If an intermediate denominator vanishes.
    """
    chi = _as_cf(chi)
    if not len(chi):
        raise DomainError("continued fraction needs at least one entry")
    value = chi.chi[-1]
    for x in reversed(chi.chi[:-1]):
        if value == 0:
            raise SingularError("zero intermediate denominator in continued fraction")
        value = x - 1 / value
    numerator = tri_minors(chi)[-1]
    denominator = tri_minors(ContinuedFraction(chi.chi[1:]))[-1]
    return CFValue(Fraction(value), Fraction(numerator), Fraction(denominator))


def m_matrix(x) -> Matrix:
    """``M(x) = [[x, -1], [1, 0]]``, the matrix of ``T^x S`` in SL(2, Z)."""
    return [[scalar(x), Fraction(-1)], [Fraction(1), Fraction(0)]]


def cf_matrix(chi) -> Matrix:
    """``M(chi_1) ... M(chi_n)``; its first column is ``(a, c)`` with ``a/c = [chi]``."""
    out: Matrix = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    for x in _as_cf(chi):
        out = mat_mul(out, m_matrix(x))
    return out


# -------------------- expansion --------------------
def _validate_fraction(a: int, c: int) -> None:
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (a, c)):
        raise DomainError("cf_expand needs integer numerator and denominator")
    if c == 0:
        raise DomainError("denominator must be nonzero")
    if gcd(a, c) != 1:
        raise DomainError("numerator and denominator must be coprime")


def _big_entry(x: Fraction) -> List[int]:
    """Hirzebruch-Jung expansion of ``x > 1``: ceiling quotients, all ``>= 2``."""
    out = []
    while True:
        if x.denominator == 1:
            out.append(int(x))
            return out
        k = ceil(x)
        out.append(k)
        x = 1 / (k - x)


def _nearest_even(x: Fraction) -> int:
    lo = 2 * floor(x / 2)
    return lo if x - lo <= lo + 2 - x else lo + 2


def _even(x: Fraction, max_depth: int) -> List[int]:
    out = []
    while len(out) < max_depth:
        k = _nearest_even(x)
        out.append(k)
        if x == k:
            return out
        x = 1 / (k - x)
    raise UnsatisfiableError(f"no even expansion within depth {max_depth}")


def cf_expand(a: int, c: int, mode: str = "big-entry", max_depth: int = MAX_EVEN_DEPTH) -> ContinuedFraction:
    """Improper continued fraction of ``a/c`` under an entry constraint.

    ``"big-entry"`` produces ``|chi_k| >= 2``: ceiling (Hirzebruch-Jung)
    quotients for ``a/c > 1`` and the negated expansion for ``a/c < -1``.
    Such fractions always have modulus above 1, so ``|a/c| <= 1`` is
    unsatisfiable.

    ``"even"`` produces even entries by nearest-even rounding. Even entries
    only reach fractions with ``a c`` even; the expansion is bounded by
    ``max_depth`` terms.

    :param int a: Numerator.
    :param int c: Denominator, nonzero, coprime to ``a``.
    :param str mode: ``"big-entry"`` or ``"even"``.
    :returns: Entries whose value reconstructs ``a/c`` exactly.
    :rtype: ContinuedFraction
    :raises DomainError: On malformed input.
    :raises UnsatisfiableError: If no expansion meets the constraint.
    """
    if mode not in MODES:
        raise DomainError(f"unknown expansion mode {mode!r}")
    _validate_fraction(a, c)
    x = Fraction(a, c)
    if mode == "big-entry":
        if abs(x) <= 1:
            raise UnsatisfiableError(f"{x} has no expansion with all |entries| >= 2")
        entries = _big_entry(x) if x > 0 else [-k for k in _big_entry(-x)]
    else:
        if a % 2 and c % 2:
            raise UnsatisfiableError("even entries never reach a fraction with odd numerator and denominator")
        entries = _even(x, max_depth)
        logger.debug("cf_expand: even expansion of %s has %d terms", x, len(entries))
    out = ContinuedFraction.of(entries)
    if cf_eval(out).value != x:
        raise UnsatisfiableError(f"expansion of {x} failed to reconstruct")
    return out


# -------------------- Sylvester's tridiagonal form --------------------
def sturm_tri(P) -> EpsSymMatrix:
    """``Tri(Q_1, ..., Q_n)`` of the Sturm quotients, over rational functions.

    Evaluated at a point ``a`` where no chain element vanishes, its signature
    is ``n - 2 var(a)``.

    :raises DomainError: If ``P`` has a repeated factor.
    """
    if not is_regular(P):
        raise DomainError("sturm_tri needs a polynomial without repeated factors")
    chain = sturm_chain(P)
    return tri([RatFunc(q) for q in chain.quotients])
