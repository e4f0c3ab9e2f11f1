# src/signet/forms/signature.py
"""Principal minors, sign variation and exact signatures.

Three independent routes to the inertia ``(p, q, nullity)``:

- ``"sjgf"``: for regular matrices (all leading minors nonzero) the
  signature is ``sum sign(mu_k / mu_{k-1}) = n - 2 var(mu)``.
- ``"lagrange"``: recursive congruence diagonalization, no hypotheses.
- ``"eps"``: leading minors of ``S + e I`` as polynomials in a positive
  infinitesimal ``e``; each sign is the sign of the lowest nonzero
  coefficient. Rational entries only.

``"auto"`` takes the SJGF route when it applies and Lagrange otherwise.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from signet.errors import DomainError, SingularError
from signet.exact.cyclotomic import CycNumber, cyc_sign
from signet.exact.poly import Poly, poly_divmod
from signet.exact.ratfunc import RatFunc
from signet.exact.rational import sign
from signet.forms.diagonalize import lagrange_reduce
from signet.forms.linalg import Matrix, determinant, submatrix
from signet.forms.matrix import EpsSymMatrix, as_form

logger = logging.getLogger(__name__)

_METHODS = ("auto", "sjgf", "lagrange", "eps")


@dataclass(frozen=True)
class MinorSequence:
    """Leading principal minors ``mu_0 = 1, mu_1, ..., mu_n``."""

    values: Tuple[object, ...]

    def __iter__(self) -> Iterator[object]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int):
        return self.values[k]

    def is_regular(self) -> bool:
        return all(v != 0 for v in self.values)


@dataclass(frozen=True)
class SignatureProfile:
    """Inertia of a hermitian form: ``p`` positive, ``q`` negative, ``nullity``."""

    p: int
    q: int
    nullity: int

    @property
    def tau(self) -> int:
        return self.p - self.q

    @property
    def dimension(self) -> int:
        return self.p + self.q + self.nullity

    def as_dict(self) -> Dict[str, int]:
        return {"p": self.p, "q": self.q, "nullity": self.nullity}


def sign_of(x) -> int:
    """Exact sign of a scalar from an ordered subfield.

    :raises DomainError: For non-constant rational functions or non-real
        cyclotomic numbers.
    """
    if isinstance(x, CycNumber):
        return cyc_sign(x)
    if isinstance(x, RatFunc):
        if x.den.degree == 0 and x.num.degree <= 0:
            return sign(x.num[0])
        raise DomainError("evaluate rational-function entries at a point before taking signs")
    if isinstance(x, Poly):
        if x.degree <= 0:
            return sign(x[0])
        raise DomainError("sign of a non-constant polynomial")
    return sign(x)


def _pivots_without_search(rows: Matrix) -> List[object]:
    """Gaussian pivots in natural order; stops at the first zero pivot."""
    M = [list(r) for r in rows]
    n = len(M)
    out = []
    for k in range(n):
        piv = M[k][k]
        if piv == 0:
            break
        out.append(piv)
        inv = 1 / piv
        for i in range(k + 1, n):
            f = M[i][k]
            if f != 0:
                f = f * inv
                Mi, Mk = M[i], M[k]
                for j in range(k + 1, n):
                    if Mk[j] != 0:
                        Mi[j] = Mi[j] - f * Mk[j]
    return out


def principal_minors(S) -> MinorSequence:
    """Leading principal minors of a square matrix.

    :param S: :class:`EpsSymMatrix` or raw square matrix (no symmetry needed).
    :returns: ``(1, mu_1, ..., mu_n)``.
    :rtype: MinorSequence
    """
    rows = S.rows() if isinstance(S, EpsSymMatrix) else [list(r) for r in S]
    n = len(rows)
    pivots = _pivots_without_search(rows)
    values: List[object] = [Fraction(1)]
    for piv in pivots:
        values.append(values[-1] * piv)
    for k in range(len(pivots) + 1, n + 1):
        values.append(determinant(submatrix(rows, range(k), range(k))))
    return MinorSequence(tuple(values))


def variation(values: Sequence[object]) -> int:
    """Number of sign changes between consecutive entries.

    :raises DomainError: If an entry is zero.
    """
    signs = []
    for v in values:
        s = sign_of(v)
        if s == 0:
            raise DomainError("variation needs nonzero entries")
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _profile_from_signs(signs: Sequence[int], n: int) -> SignatureProfile:
    p = sum(1 for s in signs if s > 0)
    q = sum(1 for s in signs if s < 0)
    return SignatureProfile(p, q, n - p - q)


def _real_sign(x) -> int:
    if isinstance(x, CycNumber) and not x.is_real():
        raise DomainError("hermitian pivot is not conjugation-fixed")
    return sign_of(x)


def _signature_sjgf(form: EpsSymMatrix) -> SignatureProfile:
    pivots = _pivots_without_search(form.rows())
    if len(pivots) < form.n:
        raise SingularError("matrix is not regular (a leading minor vanishes)")
    return _profile_from_signs([_real_sign(x) for x in pivots], form.n)


def _signature_lagrange(form: EpsSymMatrix) -> SignatureProfile:
    _, D = lagrange_reduce(form.rows())
    return _profile_from_signs([_real_sign(x) for x in D], form.n)


def _lowest_sign(P: Poly) -> Tuple[int, int]:
    """(order of vanishing at 0, sign of the lowest nonzero coefficient)."""
    for k, c in enumerate(P.coeffs):
        if c != 0:
            return k, sign(c)
    raise SingularError("zero minor in the perturbed matrix")


def perturbed_minors(S) -> List[Poly]:
    """Leading minors of ``S + e I`` as polynomials in ``e`` (Bareiss)."""
    form = as_form(S)
    if form.field != "Q":
        raise DomainError("the infinitesimal cross-check needs rational entries")
    n = form.n
    M = [
        [Poly((form[i, j], 1)) if i == j else Poly((form[i, j],)) for j in range(n)]
        for i in range(n)
    ]
    prev = Poly((1,))
    minors = [prev]
    for k in range(n):
        piv = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * piv - M[i][k] * M[k][j]
                M[i][j] = poly_divmod(num, prev)[0]
        prev = piv
        minors.append(piv)
    return minors


def signature_eps(S) -> SignatureProfile:
    """Inertia through the regular perturbation ``S + e I`` with ``e -> 0+``.

    Every leading minor of ``S + e I`` is a monic polynomial in ``e``, so the
    perturbed matrix is regular; its signature counts the null directions as
    positive, and the nullity is the order of vanishing of ``det(S + e I)``.
    """
    minors = perturbed_minors(S)
    n = len(minors) - 1
    lows = [_lowest_sign(m) for m in minors]
    tau_eps = sum(a[1] * b[1] for a, b in zip(lows, lows[1:]))
    nullity = lows[-1][0]
    tau = tau_eps - nullity
    p = (tau + n - nullity) // 2
    return SignatureProfile(p, n - nullity - p, nullity)


def signature(S, method: str = "auto") -> SignatureProfile:
    """Exact inertia of a symmetric or hermitian matrix.

    :param S: :class:`EpsSymMatrix` (epsilon = +1) or raw matrix with
        rational, real-cyclotomic-compatible or constant entries.
    :param str method: ``"auto"``, ``"sjgf"``, ``"lagrange"`` or ``"eps"``.
    :returns: ``(p, q, nullity)``.
    :rtype: SignatureProfile
    :raises DomainError: If the matrix is not hermitian or the method is unknown.
    """
    if method not in _METHODS:
        raise DomainError(f"unknown signature method {method!r}")
    form = as_form(S)
    if form.epsilon != 1:
        raise DomainError("signature needs a symmetric or hermitian form")
    if method == "sjgf":
        return _signature_sjgf(form)
    if method == "lagrange":
        return _signature_lagrange(form)
    if method == "eps":
        return signature_eps(form)
    pivots = _pivots_without_search(form.rows())
    if len(pivots) == form.n:
        return _profile_from_signs([_real_sign(x) for x in pivots], form.n)
    logger.debug("signature: leading minor %d vanishes, using Lagrange reduction", len(pivots) + 1)
    return _signature_lagrange(form)


def tau(S) -> int:
    """Shorthand for ``signature(S).tau``."""
    return signature(S).tau
