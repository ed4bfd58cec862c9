"""Rational functions num/den over the x-ring, kept in lowest terms."""
from __future__ import annotations

from fractions import Fraction

from ..scalars import CyclotomicElement
from .gcd import poly_gcd
from .poly import PolyRing, Polynomial


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic under the ring's order."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            raise TypeError("numerator must be a Polynomial")
        if den is None:
            den = num.ring.one()
        num._check(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = num, den.ring.one()
        else:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num, den = num.exact_div(g), den.exact_div(g)
            self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_coprime(cls, num, den):
        """Trust that num and den are coprime; only normalize the denominator."""
        if not num:
            return cls._raw(num, num.ring.one())
        n, d = _normalize(num, den)
        return cls._raw(n, d)

    @property
    def ring(self) -> PolyRing:
        return self.num.ring

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def degree_bound(self):
        """max(deg num, deg den), the size measure used in degree certificates."""
        return max(self.num.degree(), self.den.degree(), 0)

    # -- arithmetic ------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction._raw(other, other.ring.one())
        if isinstance(other, (int, Fraction, CyclotomicElement)):
            ring = self.num.ring
            return RationalFunction._raw(ring.const(other), ring.one())
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_constant() and d.is_constant():
            return RationalFunction._raw(a + c, b)
        if b == d:
            return RationalFunction(a + c, b)
        if d.is_constant():
            return RationalFunction.from_coprime(a + c * b, b)
        if b.is_constant():
            return RationalFunction.from_coprime(a * d + c, d)
        g = poly_gcd(b, d)
        if g.is_constant():
            return RationalFunction.from_coprime(a * d + c * b, b * d)
        bg, dg = b.exact_div(g), d.exact_div(g)
        num = a * dg + c * bg
        if not num:
            return RationalFunction._raw(num, num.ring.one())
        # only factors of g can cancel
        h = poly_gcd(num, g)
        if not h.is_constant():
            num = num.exact_div(h)
            g = g.exact_div(h)
        return RationalFunction.from_coprime(num, bg * dg * g)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicElement)):
            if not other:
                return RationalFunction._raw(self.num.ring.zero(), self.den.ring.one())
            return RationalFunction._raw(self.num.scale(other), self.den)
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            ring = self.num.ring
            return RationalFunction._raw(ring.zero(), ring.one())
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_constant() and d.is_constant():
            return RationalFunction._raw(a * c, b)
        g1 = poly_gcd(a, d) if not d.is_constant() else None
        g2 = poly_gcd(c, b) if not b.is_constant() else None
        if g1 is not None and not g1.is_constant():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2 is not None and not g2.is_constant():
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RationalFunction.from_coprime(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction.from_coprime(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicElement)):
            return self * CyclotomicElement.rational(other).inverse()
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction._raw(self.num ** e, self.den ** e)

    def substitute_map(self, fn):
        """Apply a ring map to numerator and denominator and re-normalize."""
        num, den = fn(self.num), fn(self.den)
        return RationalFunction(num, den)

    # -- comparison / printing ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Polynomial):
            return self.den.is_constant() and self.num == other
        if isinstance(other, (int, Fraction, CyclotomicElement)):
            return self.den.is_constant() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.den.is_constant() else hash((self.num, self.den))
        return self._hash

    def __str__(self):
        n = str(self.num)
        if self.den.is_constant():
            return n
        d = str(self.den)
        if len(self.num) > 1:
            n = f"({n})"
        if len(self.den) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction({self})"


def _normalize(num: Polynomial, den: Polynomial):
    lc = den.leading_coeff()
    if lc == 1:
        return num, den
    inv = 1 / lc
    return num.scale(inv), den.scale(inv)


class RationalFunctionField:
    """k(x_1..x_n) as a coefficient field for polynomials in other variables."""

    def __init__(self, base: PolyRing):
        self.base = base
        self.zero = RationalFunction._raw(base.zero(), base.one())
        self.one = RationalFunction._raw(base.one(), base.one())

    def convert(self, value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            if value.ring != self.base:
                raise TypeError("polynomial from a different ring")
            return RationalFunction._raw(value, self.base.one())
        if isinstance(value, (int, Fraction, CyclotomicElement)):
            return RationalFunction._raw(self.base.const(value), self.base.one())
        if isinstance(value, str):
            from .literal import parse_rational_function

            return parse_rational_function(value, self.base)
        raise TypeError(f"cannot convert {value!r} into {self!r}")

    def format(self, c) -> str:
        return str(c)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.base == self.base

    def __hash__(self):
        return hash(("ratfunc", self.base))

    def __repr__(self):
        return f"Frac({','.join(self.base.names)})"
