# src/signet/witt/linking.py
"""Linking forms over ``(Z, Z - 0)``, lens spaces and plumbing-chain boundaries.

A summand ``(c, a)`` is the cyclic group ``Z/c`` with ``lambda(1, 1) = a/c``
in ``Q/Z``. Witt classes of linking forms split over primes: a cyclic
``p``-primary piece ``(Z/p^k, a')`` is metabolic for even ``k`` and reduces
to ``<a'>`` in ``W(F_p)`` for odd ``k``; at ``p = 2`` only the parity of
such pieces survives.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

from signet.errors import DomainError
from signet.exact.factor import prime_factors, squarefree_core
from signet.witt.finite import WittClassFp, witt_fp
from signet.witt.rational import rational_diagonal

logger = logging.getLogger(__name__)

Summand = Tuple[int, int]


def _validate_summand(c: int, a: int) -> None:
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (c, a)):
        raise DomainError("linking summands need integer modulus and numerator")
    if c == 0:
        raise DomainError("linking modulus must be nonzero")
    if gcd(a, c) != 1:
        raise DomainError(f"numerator {a} is not coprime to modulus {c}")


def _normalize(c: int, a: int) -> Summand:
    if c < 0:
        c, a = -c, -a
    return c, a % c


@dataclass(frozen=True)
class LinkingFormZ:
    """Orthogonal sum of cyclic linking forms ``(Z/c, a/c)`` with ``c > 1``."""

    summands: Tuple[Summand, ...] = ()

    @classmethod
    def of(cls, summands: Sequence[Sequence[int]]) -> "LinkingFormZ":
        """Validate and normalize to ``c > 1``, ``0 < a < c``; trivial groups are dropped.

        :raises DomainError: If a numerator is not coprime to its modulus.
        """
        out = []
        for c, a in summands:
            _validate_summand(c, a)
            if abs(c) > 1:
                out.append(_normalize(c, a))
        return cls(tuple(out))

    def __iter__(self) -> Iterator[Summand]:
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def order(self) -> int:
        """Order of the underlying finite group."""
        out = 1
        for c, _ in self.summands:
            out *= c
        return out

    def __add__(self, other: "LinkingFormZ") -> "LinkingFormZ":
        if not isinstance(other, LinkingFormZ):
            return NotImplemented
        return LinkingFormZ(self.summands + other.summands)

    def __neg__(self) -> "LinkingFormZ":
        return LinkingFormZ(tuple(_normalize(c, -a) for c, a in self.summands))

    def is_zero(self) -> bool:
        """True when the form is metabolic (zero Witt class)."""
        two, local = linking_invariants(self)
        return two == 0 and not local

    def as_list(self) -> List[List[int]]:
        return [[c, a] for c, a in self.summands]


def linking_invariants(L: LinkingFormZ) -> Tuple[int, Dict[int, WittClassFp]]:
    """Parity at 2 and nonzero ``W(F_p)`` classes at odd primes."""
    two = 0
    buckets: Dict[int, List[int]] = {}
    for c, a in L:
        for p, k in prime_factors(c).items():
            if k % 2 == 0:
                continue
            if p == 2:
                two ^= 1
                continue
            cofactor = c // p**k
            buckets.setdefault(p, []).append(a * cofactor)
    local = {p: witt_fp(units, p) for p, units in buckets.items()}
    return two, {p: cl for p, cl in local.items() if not cl.is_zero()}


def linking_witt_eq(L1: LinkingFormZ, L2: LinkingFormZ) -> bool:
    """Witt equality of two linking forms, by their prime-local invariants."""
    return linking_invariants(L1) == linking_invariants(L2)


def _cancel_pairs(summands: List[Summand]) -> Tuple[Summand, ...]:
    """Drop pairs ``(c, a), (c, -a)``, which together are metabolic."""
    pool = list(summands)
    out: List[Summand] = []
    while pool:
        c, a = pool.pop(0)
        mate = next((i for i, s in enumerate(pool) if s == (c, (-a) % c)), None)
        if mate is None:
            out.append((c, a))
        else:
            pool.pop(mate)
    return tuple(sorted(out))


def boundary_of_diagonal(entries: Sequence[object]) -> LinkingFormZ:
    """``(+) d<s_i>`` for nonzero rationals, each reduced to its squarefree core.

    ``d<s> = (Z/|s|, sign(s)/|s|)``; metabolic pairs are cancelled.
    """
    raw = []
    for d in entries:
        s = squarefree_core(d)
        if abs(s) > 1:
            raw.append(_normalize(s, 1))
    return LinkingFormZ(_cancel_pairs(raw))


def linking_boundary(S) -> LinkingFormZ:
    """Boundary linking form of a nonsingular symmetric rational matrix.

    The form is diagonalized over the rationals and each entry is replaced by
    its squarefree core; the result is Witt-equivalent to the linking form
    on ``coker(S)`` of any integral lattice carrying ``S``.

    :raises SingularError: If ``det S = 0``.
    """
    return boundary_of_diagonal(rational_diagonal(S))


# -------------------- lens spaces --------------------
def lens_normalize(c: int, a: int) -> Tuple[int, int]:
    """``L(c, a) = L(c, a + q c)``: reduce ``a`` to ``0 <= a < |c|``."""
    _validate_summand(c, a)
    return c, a % abs(c)


def lens_linking(c: int, a: int) -> LinkingFormZ:
    """Linking form ``(Z/c, a/c)`` of the lens space ``L(c, a)``.

    :raises DomainError: If ``gcd(a, c) != 1`` or ``c = 0``.
    """
    _validate_summand(c, a)
    return LinkingFormZ.of([(c, a)])


# -------------------- Euclidean chains --------------------
def euclidean_chain(p0: int, p1: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Hirzebruch-Jung chain of ``p0 > p1 > 0`` coprime.

    :returns: ``p = (p_0, ..., p_n = 1)`` and ``q = (q_1, ..., q_n)`` with
        ``p_{k-1} + p_{k+1} = q_k p_k`` and ``p_{n+1} = 0``.
    :raises DomainError: Unless ``p0 > p1 > 0`` are coprime.
    """
    if not (isinstance(p0, int) and isinstance(p1, int)) or not p0 > p1 > 0 or gcd(p0, p1) != 1:
        raise DomainError("euclidean_chain needs coprime p0 > p1 > 0")
    ps = [p0, p1]
    qs = []
    while ps[-1] != 1:
        q = -(-ps[-2] // ps[-1])
        qs.append(q)
        ps.append(q * ps[-1] - ps[-2])
    qs.append(ps[-2])
    return tuple(ps), tuple(qs)


def chain_boundary(p: Sequence[int]) -> LinkingFormZ:
    """``(+)_k d<p_{k-1} p_k>`` for a Euclidean chain ``p``."""
    if len(p) < 2:
        raise DomainError("chain needs at least two terms")
    return boundary_of_diagonal([p[k - 1] * p[k] for k in range(1, len(p))])


# -------------------- coprime splitting --------------------
class TrilinkingSplit(NamedTuple):
    """``w -> (b w mod s, a w mod t)`` where ``a s + b t = 1``."""

    s: int
    t: int
    a: int
    b: int

    def apply(self, w: int) -> Tuple[int, int]:
        return (self.b * w) % self.s, (self.a * w) % self.t


def trilinking_split(s: int, t: int) -> TrilinkingSplit:
    """Isomorphism ``(Z/st, 1/st) -> (Z/s, t/s) + (Z/t, s/t)`` for coprime ``s, t > 0``."""
    if s <= 0 or t <= 0 or gcd(s, t) != 1:
        raise DomainError("trilinking_split needs coprime positive moduli")
    a = pow(s, -1, t) if t > 1 else 0
    b = (1 - a * s) // t
    return TrilinkingSplit(s, t, a, b)


def verify_trilinking(s: int, t: int) -> bool:
    """Check that :func:`trilinking_split` is bijective and preserves ``lambda`` on all pairs."""
    split = trilinking_split(s, t)
    n = s * t
    images = [split.apply(w) for w in range(n)]
    if len(set(images)) != n:
        return False
    for w in range(n):
        x1, y1 = images[w]
        for v in range(w, n):
            x2, y2 = images[v]
            # lambda(w, v) = wv/st; image: t x1 x2 / s + s y1 y2 / t.
            lhs = (w * v) % n
            rhs = (t * t * x1 * x2 + s * s * y1 * y2) % n
            if lhs != rhs:
                return False
    return True
