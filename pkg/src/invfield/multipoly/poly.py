"""Sparse multivariate polynomials over a pluggable coefficient field."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb
from typing import Any, Iterable

from ..scalars import CyclotomicElement, parse_scalar
from .orders import TermOrder, as_order

NEG_INF = float("-inf")
"""Degree of the zero polynomial."""


class RingMismatchError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


class CyclotomicField:
    """Coefficient field Q(zeta_m); ``order`` is the declared m used for literals."""

    def __init__(self, order: int = 1):
        self.order = order
        self.zero = CyclotomicElement.rational(0)
        self.one = CyclotomicElement.rational(1)

    def convert(self, value):
        if isinstance(value, CyclotomicElement):
            return value
        if isinstance(value, (int, Fraction)):
            return CyclotomicElement.rational(value)
        if isinstance(value, str):
            return parse_scalar(value, self.order)
        raise TypeError(f"cannot convert {value!r} into Q(zeta_{self.order})")

    def format(self, c) -> str:
        return c.to_literal(self.order) if self.order % c.order == 0 else c.to_literal()

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("cyclotomic", self.order))

    def __repr__(self):
        return f"QQ(zeta_{self.order})" if self.order > 2 else "QQ"


@dataclass(frozen=True)
class PolyRing:
    names: tuple[str, ...]
    field: Any = dc_field(default_factory=CyclotomicField)
    order: TermOrder = dc_field(default_factory=TermOrder)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "order", as_order(self.order))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names {self.names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.names, self.field, as_order(order))

    def zero(self) -> "Polynomial":
        return Polynomial._new(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial._new(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, i: int | str) -> "Polynomial":
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial._new(self, {tuple(e): self.field.one})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps: Iterable[int], c=1) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial._new(self, {tuple(exps): c} if c else {})

    def monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """Exponent vectors of total degree d, descending in the ring's order."""
        out = list(_compositions(d, self.nvars))
        out.sort(key=self.order.key, reverse=True)
        return out

    def dim_degree(self, d: int) -> int:
        return comb(self.nvars + d - 1, d) if self.nvars else int(d == 0)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatchError(f"{value.ring} vs {self}")
            return value
        if isinstance(value, str):
            from .literal import parse_polynomial

            return parse_polynomial(value, self)
        return self.const(value)

    def __repr__(self):
        return f"PolyRing({','.join(self.names)} over {self.field!r}, {self.order})"


def _compositions(d, n):
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, n - 1):
            yield (first,) + rest


def _divides(a, b) -> bool:
    """Monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    return _divides(a, b)


class Polynomial:
    """Immutable sparse polynomial: a dict from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms=None):
        conv = ring.field.convert
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != ring.nvars:
                raise ValueError(f"monomial {mono} has wrong length for {ring}")
            c = conv(c)
            if c:
                clean[mono] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _new(cls, ring, terms):
        obj = object.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hash = None
        return obj

    # -- structure -------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def degree_in(self, i: int):
        if not self.terms:
            return NEG_INF
        return max(m[i] for m in self.terms)

    def min_degree(self):
        if not self.terms:
            return NEG_INF
        return min(sum(m) for m in self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coeff(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._new(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d})

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            out.setdefault(sum(m), {})[m] = c
        return {d: Polynomial._new(self.ring, t) for d, t in sorted(out.items())}

    def sorted_terms(self, order: TermOrder | None = None):
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def monomials(self, order: TermOrder | None = None):
        return [m for m, _ in self.sorted_terms(order)]

    def leading_monomial(self, order: TermOrder | None = None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=(order or self.ring.order).key)

    def leading_coeff(self, order: TermOrder | None = None):
        return self.terms[self.leading_monomial(order)]

    def leading_term(self, order: TermOrder | None = None):
        m = self.leading_monomial(order)
        return m, self.terms[m]

    def monic(self, order: TermOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coeff(order)
        if lc == 1:
            return self
        inv = 1 / lc
        return Polynomial._new(self.ring, {m: c * inv for m, c in self.terms.items()})

    def variables(self) -> list[int]:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return sorted(used)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        try:
            return self.ring.const(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._new(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._new(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = -c
            else:
                v = v - c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._new(self.ring, out)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, c) -> "Polynomial":
        c = self.ring.field.convert(c)
        if not c:
            return self.ring.zero()
        if c == 1:
            return self
        return Polynomial._new(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono, c) -> "Polynomial":
        """self * c * x^mono."""
        if not c:
            return self.ring.zero()
        return Polynomial._new(
            self.ring, {tuple(x + y for x, y in zip(m, mono)): v * c for m, v in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.ring.zero()
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                v = get(m)
                out[m] = ca * cb if v is None else v + ca * cb
        return Polynomial._new(self.ring, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if other.is_constant() and other:
                return self.scale(1 / other.constant_coeff())
            return self.exact_div(other)
        return self.scale(1 / self.ring.field.convert(other))

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient self / other, raising NotDivisibleError unless the division is exact."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.terms:
            return self
        if len(other.terms) == 1:
            (mb, cb), = other.terms.items()
            inv = 1 / cb
            out = {}
            for m, c in self.terms.items():
                if not _divides(mb, m):
                    raise NotDivisibleError("not divisible")
                out[tuple(x - y for x, y in zip(m, mb))] = c * inv
            return Polynomial._new(self.ring, out)
        # exactness does not depend on the order, so plain lex with a heap will do
        lm_b = max(other.terms)
        inv = 1 / other.terms[lm_b]
        rest = [(m, c) for m, c in other.terms.items() if m != lm_b]
        rem = dict(self.terms)
        heap = [tuple(-x for x in m) for m in rem]
        heapq.heapify(heap)
        q = {}
        while rem:
            lm = tuple(-x for x in heapq.heappop(heap))
            if lm not in rem:
                continue
            if not _divides(lm_b, lm):
                raise NotDivisibleError("not divisible")
            c = rem.pop(lm) * inv
            t = tuple(x - y for x, y in zip(lm, lm_b))
            q[t] = c
            for m, v in rest:
                mm = tuple(x + y for x, y in zip(m, t))
                w = rem.get(mm)
                if w is None:
                    rem[mm] = -(v * c)
                    heapq.heappush(heap, tuple(-x for x in mm))
                else:
                    w = w - v * c
                    if w:
                        rem[mm] = w
                    else:
                        del rem[mm]
        return Polynomial._new(self.ring, q)

    def divides(self, other: "Polynomial") -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisibleError:
            return False

    # -- substitution ---------------------------------------------------------

    def substitute(self, values, one=None):
        """Replace variable i by values[i] (polynomials, rational functions or scalars).

        ``one`` is the multiplicative identity of the target; by default the
        result type is taken from the values.
        """
        if len(values) != self.ring.nvars:
            raise ValueError("need one value per variable")
        power_cache: dict = {}

        def power(i, e):
            k = (i, e)
            p = power_cache.get(k)
            if p is None:
                p = values[i] ** e
                power_cache[k] = p
            return p

        total = None
        for m, c in self.terms.items():
            term = None
            for i, e in enumerate(m):
                if e:
                    p = power(i, e)
                    term = p if term is None else term * p
            if term is None:
                term = c if one is None else one * c
            else:
                term = term * c
            total = term if total is None else total + term
        if total is None:
            return 0 if one is None else one * 0
        return total

    def evaluate(self, point):
        return self.substitute([self.ring.field.convert(v) for v in point])

    def map_coeffs(self, fn, ring: PolyRing | None = None) -> "Polynomial":
        ring = ring or self.ring
        out = {}
        for m, c in self.terms.items():
            v = fn(c)
            if v:
                out[m] = v
        return Polynomial._new(ring, out)

    def change_ring(self, ring: PolyRing) -> "Polynomial":
        """Same terms, viewed in another ring with the same number of variables."""
        if ring.nvars != self.ring.nvars:
            raise RingMismatchError("variable count differs")
        conv = ring.field.convert
        return Polynomial._new(ring, {m: conv(c) for m, c in self.terms.items()})

    # -- comparison / printing -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            other = self.ring.field.convert(other)
        except TypeError:
            return NotImplemented
        if not other:
            return not self.terms
        return len(self.terms) == 1 and self.terms.get((0,) * self.ring.nvars) == other

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_coeff())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        from .literal import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"
