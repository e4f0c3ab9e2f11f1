# src/signet/exact/ratfunc.py
"""Reduced rational functions ``num/den`` in one variable over the rationals.

This is the computable model of the field of real rational functions: the
denominator is monic and coprime to the numerator, so equal functions have
equal representations.
"""

from fractions import Fraction
from typing import Union

from signet.errors import DomainError, SingularError
from signet.exact.poly import Poly, poly_divmod, poly_gcd


class RatFunc:
    """A reduced fraction of polynomials.

    :param num: Numerator (Poly or rational).
    :param den: Denominator (Poly or rational), nonzero.
    :raises SingularError: If ``den`` is zero.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[Poly, int, Fraction], den: Union[Poly, int, Fraction] = 1):
        n = num if isinstance(num, Poly) else Poly((num,))
        d = den if isinstance(den, Poly) else Poly((den,))
        if d.is_zero():
            raise SingularError("rational function with zero denominator")
        if n.is_zero():
            n, d = Poly(), Poly((1,))
        else:
            g = poly_gcd(n, d)
            if g.degree > 0:
                n = poly_divmod(n, g)[0]
                d = poly_divmod(d, g)[0]
            lc = d.lc
            n, d = n / lc, d / lc
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(Poly.x())

    @staticmethod
    def _lift(other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFunc(Poly((other,)))
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.den.degree == 0:
            return hash(self.num)
        return hash((self.num, self.den))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

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
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise SingularError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if not isinstance(k, int):
            raise DomainError("exponent must be an integer")
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k)

    def evaluate(self, a) -> Fraction:
        """Value at a rational point.

        :raises SingularError: If ``a`` is a pole.
        """
        d = self.den.evaluate(a)
        if d == 0:
            raise SingularError(f"{a} is a pole")
        return self.num.evaluate(a) / d

    __call__ = evaluate

    def sign_at_infinity(self) -> int:
        """Sign of the function for large positive arguments."""
        if self.is_zero():
            return 0
        return 1 if self.num.lc > 0 else -1

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"
