# src/signet/exact/poly.py
"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first as a tuple of
:class:`~fractions.Fraction`; the zero polynomial is the empty tuple.
Values are immutable, so polynomials can be shared freely and used as
dictionary keys.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple, Union

from signet.errors import DomainError, SingularError
from signet.exact.rational import fraction_to_str, to_fraction

Scalar = Union[int, Fraction]


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    if isinstance(c, str):
        return to_fraction(c)
    raise DomainError(f"polynomial coefficient must be rational, got {type(c).__name__}")


def _trim(cs: List[Fraction]) -> Tuple[Fraction, ...]:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


class Poly:
    """Polynomial ``c[0] + c[1] X + ... + c[n] X^n`` with rational ``c[i]``.

    :param coeffs: Coefficients, constant term first. ints, Fractions and
        ``"p/q"`` strings are accepted.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([_coerce(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -------------------- constructors --------------------
    @classmethod
    def x(cls) -> "Poly":
        """The variable ``X``."""
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Sequence[Scalar]) -> "Poly":
        """Monic polynomial with the given rational roots (with repetition)."""
        out = cls((1,))
        for r in roots:
            out = out * cls((-_coerce(r), 1))
        return out

    # -------------------- basic queries --------------------
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    # -------------------- comparisons --------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    # -------------------- ring operations --------------------
    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise SingularError("division by zero")
            return Poly([c / other for c in self.coeffs])
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise DomainError("exponent must be a non-negative integer")
        out, base = Poly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return poly_divmod(self, o)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -------------------- calculus and evaluation --------------------
    def evaluate(self, x):
        """Horner evaluation at ``x``.

        ``x`` may be any value supporting ``+`` and ``*`` with rationals:
        a Fraction, a Poly (composition), a cyclotomic number, ...
        """
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def compose(self, inner: "Poly") -> "Poly":
        """``self(inner(X))``."""
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise DomainError("zero polynomial has no monic form")
        return self / self.lc

    def primitive_ints(self) -> Tuple[int, ...]:
        """Integer coefficients of a positive rational multiple with content 1."""
        if not self.coeffs:
            return ()
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return tuple(v // g for v in ints)

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self = c * primitive_part()``."""
        if not self.coeffs:
            return Fraction(0)
        ints = self.primitive_ints()
        k = next(i for i, v in enumerate(ints) if v)
        return self.coeffs[k] / ints[k]

    def primitive_part(self) -> "Poly":
        return Poly(self.primitive_ints())

    def reversed(self) -> "Poly":
        """``X^deg * self(1/X)``."""
        return Poly(tuple(reversed(self.coeffs)))

    # -------------------- display --------------------
    def __repr__(self) -> str:
        return f"Poly([{', '.join(fraction_to_str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = fraction_to_str(mag)
            else:
                head = "" if mag == 1 else fraction_to_str(mag) + "*"
                body = head + ("X" if k == 1 else f"X^{k}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for s, b in parts[1:]:
            text += f" {s} {b}"
        return text


# -------------------- Euclidean algorithm --------------------
def poly_divmod(P: Poly, Q: Poly) -> Tuple[Poly, Poly]:
    """Long division ``P = Q * quotient + remainder``.

    :param Poly P: Dividend.
    :param Poly Q: Divisor, nonzero.
    :returns: ``(quotient, remainder)`` with ``deg(remainder) < deg(Q)``.
    :rtype: Tuple[Poly, Poly]
    :raises SingularError: If ``Q`` is the zero polynomial.
    """
    if Q.is_zero():
        raise SingularError("division by the zero polynomial")
    rem = list(P.coeffs)
    dq = Q.degree
    inv_lc = 1 / Q.lc
    if len(rem) - 1 < dq:
        return Poly(), P
    quot = [Fraction(0)] * (len(rem) - dq)
    qc = Q.coeffs
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        f = c * inv_lc
        quot[k - dq] = f
        base = k - dq
        for j in range(dq + 1):
            rem[base + j] -= f * qc[j]
    return Poly(quot), Poly(rem[:dq])


# -------------------- integer remainder sequences --------------------
def _trim_ints(row: List[int]) -> List[int]:
    n = len(row)
    while n and row[n - 1] == 0:
        n -= 1
    return row[:n]


def _primitive_row(row: List[int]) -> List[int]:
    row = _trim_ints(row)
    g = gcd(*row) if row else 0
    return [v // g for v in row] if g > 1 else row


def _pseudo_remainder_row(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """``|lc(b)|^(deg a - deg b + 1) * (a mod b)`` over the integers."""
    db = len(b) - 1
    lc = b[-1]
    r = list(a)
    steps = len(r) - db
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        for i in range(k):
            r[i] *= lc
        if c:
            base = k - db
            for j in range(db):
                r[base + j] -= c * b[j]
        r[k] = 0
    r = r[:db]
    if lc < 0 and steps % 2:
        r = [-v for v in r]
    return _trim_ints(r)


def sign_at_ints(row: Sequence[int], x: Fraction) -> int:
    """Sign of ``sum(row[k] * x^k)`` at a rational ``x``, in integer arithmetic.

    Evaluates ``den^deg * P(num / den)`` by homogeneous Horner; ``den > 0``
    so the sign is that of ``P(x)``.
    """
    num, den = x.numerator, x.denominator
    acc, dpow = 0, 1
    for c in reversed(row):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def primitive_remainder(P: Poly, Q: Poly) -> Poly:
    """Primitive integer polynomial that is a positive multiple of ``P mod Q``.

    Chaining these keeps the remainder sequence over the integers with the
    content removed at every step, and its values have the same sign as the
    true remainders everywhere.

    :raises SingularError: If ``Q`` is the zero polynomial.
    """
    if Q.is_zero():
        raise SingularError("division by the zero polynomial")
    if P.degree < Q.degree:
        return Poly(P.primitive_ints())
    return Poly(_primitive_row(_pseudo_remainder_row(P.primitive_ints(), Q.primitive_ints())))


def poly_gcd(P: Poly, Q: Poly) -> Poly:
    """Monic greatest common divisor, by a primitive remainder sequence over the integers.

    :raises DomainError: If both arguments are zero.
    """
    if P.is_zero() and Q.is_zero():
        raise DomainError("gcd of two zero polynomials is undefined")
    a, b = list(P.primitive_ints()), list(Q.primitive_ints())
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive_row(_pseudo_remainder_row(a, b))
    return Poly(a).monic()


def poly_xgcd(P: Poly, Q: Poly) -> Tuple[Poly, Poly, Poly]:
    """Extended Euclid: ``(g, s, t)`` with ``s*P + t*Q = g`` and ``g`` monic."""
    if P.is_zero() and Q.is_zero():
        raise DomainError("gcd of two zero polynomials is undefined")
    r0, r1 = P, Q
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lc
    return r0 / lc, s0 / lc, t0 / lc


def squarefree_part(P: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``P``.

    :raises DomainError: If ``P`` is zero.
    """
    if P.is_zero():
        raise DomainError("squarefree part of the zero polynomial")
    if P.degree == 0:
        return Poly((1,))
    g = poly_gcd(P, P.derivative())
    if g.degree == 0:
        return P.monic()
    return poly_divmod(P, g)[0].monic()
