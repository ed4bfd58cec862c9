"""Parsing and printing of polynomial and rational-function literals.

Grammar: sums and differences of products and quotients of factors, where a
factor is a number, a variable, ``z`` (the primitive root of unity of the
ambient cyclotomic order), or a parenthesised expression, optionally raised
to a non-negative integer power with ``^`` or ``**``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..scalars import zeta
from .poly import NotDivisibleError, Polynomial, PolyRing


class PolynomialParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolynomialParseError(f"unexpected character {text[pos:].strip()[:1]!r} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


def _cyclotomic_order(ring: PolyRing) -> int:
    fld = ring.field
    base = getattr(fld, "base", None)
    if base is not None:
        return base.field.order
    return getattr(fld, "order", 1)


class _Parser:
    def __init__(self, text, ring: PolyRing, lift, divide):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.lift = lift
        self.divide = divide
        base = getattr(ring.field, "base", None)
        self.coeff_names = base.names if base is not None else ()
        self.order = _cyclotomic_order(ring)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise PolynomialParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise PolynomialParseError("empty polynomial literal")
        v = self.expr()
        if self.i != len(self.toks):
            raise PolynomialParseError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        kind, val = self.peek()
        neg = False
        if kind == "op" and val in "+-":
            self.take()
            neg = val == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.power()
                acc = acc * rhs if val == "*" else self.divide(acc, rhs)
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k, e = self.take()
            if k != "num":
                raise PolynomialParseError(f"exponent must be a non-negative integer in {self.text!r}")
            return base ** e
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.lift(self.ring.const(val))
        if kind == "name":
            if val in self.ring.names:
                return self.lift(self.ring.gen(val))
            if val in self.coeff_names:
                base = self.ring.field.base
                return self.lift(self.ring.const(self.ring.field.convert(base.gen(val))))
            if val == "z":
                return self.lift(self.ring.const(zeta(self.order)))
            raise PolynomialParseError(f"unknown variable {val!r} in {self.text!r}")
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        if kind == "op" and val in "+-":
            v = self.power()
            return -v if val == "-" else v
        raise PolynomialParseError(f"unexpected token {val!r} in {self.text!r}")


def _poly_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    if not b:
        raise PolynomialParseError("division by zero")
    try:
        return a / b
    except NotDivisibleError:
        raise PolynomialParseError("division does not give a polynomial") from None


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    return _Parser(text, ring, lambda p: p, _poly_divide).parse()


def parse_rational_function(text: str, ring: PolyRing):
    from .ratfunc import RationalFunction

    def divide(a, b):
        if not b:
            raise PolynomialParseError("division by zero")
        return a / b

    return _Parser(text, ring, lambda p: RationalFunction._raw(p, ring.one()), divide).parse()


def _top_level_compound(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == " " and depth == 0:
            return True
    return False


def format_monomial(mono, names) -> str:
    parts = []
    for e, n in zip(mono, names):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, order=None) -> str:
    if not p.terms:
        return "0"
    fmt = p.ring.field.format
    pieces = []
    for mono, c in p.sorted_terms(order):
        cs = fmt(c)
        ms = format_monomial(mono, p.ring.names)
        sign = "+"
        if _top_level_compound(cs):
            if cs.startswith("-"):
                flipped = fmt(-c)
                if not flipped.startswith("-"):
                    sign, cs = "-", flipped
            cs = f"({cs})"
        elif cs.startswith("-"):
            sign, cs = "-", cs[1:]
        if not ms:
            body = cs
        elif cs == "1":
            body = ms
        else:
            body = f"{cs}*{ms}"
        pieces.append((sign, body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
