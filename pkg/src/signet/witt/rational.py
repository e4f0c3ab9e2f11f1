# src/signet/witt/rational.py
"""Witt classes of nonsingular rational symmetric forms.

``W(Q)`` is detected by the signature together with the residues at every
prime: the residue at an odd ``p`` lies in ``W(F_p)`` and the residue at 2
is a single bit. For a diagonal form ``<s_1, ..., s_n>`` with squarefree
integers ``s_i``, the residue at ``p`` is ``<s_i / p mod p>`` summed over
the entries divisible by ``p``.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from signet.errors import DomainError, SingularError
from signet.exact.factor import prime_factors, squarefree_core
from signet.forms.diagonalize import lagrange_reduce
from signet.forms.matrix import as_form
from signet.witt.finite import WittClassFp, witt_fp

logger = logging.getLogger(__name__)


def _freeze(local: Mapping[int, WittClassFp]) -> Tuple[Tuple[int, WittClassFp], ...]:
    return tuple(sorted((p, c) for p, c in local.items() if not c.is_zero()))


def add_local(a: Mapping[int, WittClassFp], b: Mapping[int, WittClassFp]) -> Dict[int, WittClassFp]:
    """Pointwise sum of two prime-indexed residue maps, zeros dropped."""
    out = dict(a)
    for p, c in b.items():
        out[p] = out[p] + c if p in out else c
    return {p: c for p, c in out.items() if not c.is_zero()}


@dataclass(frozen=True)
class WittClassQ:
    """Invariants of a class in ``W(Q)``.

    :ivar signature: Image in ``W(R) = Z``.
    :ivar dim_mod2: Rank parity (equal to the signature mod 2).
    :ivar two_adic: Residue at 2 in ``W(F_2) = Z/2``.
    :ivar local: Nonzero residues at odd primes, sorted by prime.
    """

    signature: int
    dim_mod2: int
    two_adic: int = 0
    local: Tuple[Tuple[int, WittClassFp], ...] = field(default=())

    def local_map(self) -> Dict[int, WittClassFp]:
        return dict(self.local)

    def is_zero(self) -> bool:
        return self.signature == 0 and self.two_adic == 0 and not self.local

    def __add__(self, other: "WittClassQ") -> "WittClassQ":
        if not isinstance(other, WittClassQ):
            return NotImplemented
        return WittClassQ(
            self.signature + other.signature,
            self.dim_mod2 ^ other.dim_mod2,
            self.two_adic ^ other.two_adic,
            _freeze(add_local(self.local_map(), other.local_map())),
        )

    def __neg__(self) -> "WittClassQ":
        return WittClassQ(
            -self.signature,
            self.dim_mod2,
            self.two_adic,
            _freeze({p: -c for p, c in self.local}),
        )

    def __sub__(self, other: "WittClassQ") -> "WittClassQ":
        return self + (-other)


def residues_of_cores(cores: Iterable[int]) -> Tuple[int, Dict[int, WittClassFp]]:
    """Residue bit at 2 and odd-prime residues of ``<s_1, ..., s_n>``, ``s_i`` squarefree."""
    two = 0
    buckets: Dict[int, List[int]] = {}
    for s in cores:
        for p in prime_factors(s):
            if p == 2:
                two ^= 1
            else:
                buckets.setdefault(p, []).append(s // p)
    local = {p: witt_fp(units, p) for p, units in buckets.items()}
    return two, {p: c for p, c in local.items() if not c.is_zero()}


def witt_class_of_diagonal(entries: Sequence[object]) -> WittClassQ:
    """Class of ``<d_1, ..., d_n>`` for nonzero rationals ``d_i``.

    :raises SingularError: If an entry is zero.
    """
    cores = [squarefree_core(d) for d in entries]
    positive = sum(1 for s in cores if s > 0)
    two, local = residues_of_cores(cores)
    n = len(cores)
    return WittClassQ(2 * positive - n, n % 2, two, _freeze(local))


def rational_diagonal(S) -> List[object]:
    """Diagonal of a Lagrange reduction of a nonsingular rational symmetric form.

    :raises SingularError: If the form is singular.
    """
    form = as_form(S)
    if form.field != "Q" or form.epsilon != 1:
        raise DomainError("expected a symmetric matrix with rational entries")
    _, D = lagrange_reduce(form.rows())
    if any(d == 0 for d in D):
        raise SingularError("form is singular")
    return list(D)


def witt_q(S) -> WittClassQ:
    """Witt class of a nonsingular symmetric rational matrix.

    :param S: :class:`~signet.forms.matrix.EpsSymMatrix` or raw matrix.
    :returns: Signature, rank parity and the residues at every prime.
    :rtype: WittClassQ
    :raises SingularError: If ``det S = 0``.
    """
    D = rational_diagonal(S)
    logger.debug("witt_q: diagonal %s", [str(d) for d in D])
    return witt_class_of_diagonal(D)
