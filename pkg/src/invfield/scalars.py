"""Exact arithmetic in Q and in the cyclotomic fields Q(zeta_m).

Elements of Q(zeta_m) are stored in the power basis 1, z, ..., z^(phi(m)-1)
reduced modulo the m-th cyclotomic polynomial, as an integer coordinate
vector over one positive common denominator.  Anything that turns out to be
rational is stored with order 1, so ``zeta(4, 2)`` and ``-1`` are the same
object up to equality and hashing.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

Rational = Fraction

__all__ = [
    "Rational",
    "CyclotomicElement",
    "ScalarParseError",
    "cyclotomic_polynomial",
    "euler_phi",
    "parse_scalar",
    "zeta",
]


class ScalarParseError(ValueError):
    pass


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        num = _exact_div_monic(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div_monic(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for k in range(dn + 1):
                num[i - dn + k] -= c * den[k]
    assert not any(num[:dn]), "cyclotomic division not exact"
    return q


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the power-basis coordinates of z^k for 0 <= k < m."""
    phi = euler_phi(m)
    cyc = cyclotomic_polynomial(m)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by z, then fold z^phi = -(cyc[0] + ... + cyc[phi-1] z^(phi-1))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_vector(m: int) -> tuple[Fraction, ...]:
    """Normalized traces Tr(z^i)/phi(m); independent of the ambient field."""
    phi = euler_phi(m)
    out = []
    for i in range(phi):
        total = Fraction(0)
        for k in range(1, m + 1):
            if gcd(k, m) == 1:
                total += _power_table(m)[(i * k) % m][0]
        out.append(total / phi)
    return tuple(out)


def _make(m: int, coeffs, den: int) -> "CyclotomicElement":
    """Canonicalize raw integer data into an element (content/denominator, order 1 if rational)."""
    if den < 0:
        coeffs = [-c for c in coeffs]
        den = -den
    g = den
    for c in coeffs:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if not any(coeffs):
        return CyclotomicElement._raw(1, (0,), 1)
    if g != 1:
        coeffs = [c // g for c in coeffs]
        den //= g
    if m > 1 and not any(coeffs[1:]):
        return CyclotomicElement._raw(1, (coeffs[0],), den)
    return CyclotomicElement._raw(m, tuple(coeffs), den)


class CyclotomicElement:
    """An element of Q(zeta_m), immutable, canonical in the power basis."""

    __slots__ = ("m", "c", "den", "_hash")

    def __init__(self, order: int, coeffs=(0,)):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        phi = euler_phi(order)
        fr = [Fraction(x) for x in coeffs]
        if len(fr) > phi:
            # accept over-long input and reduce it modulo Phi_m
            table = _power_table(order)
            red = [Fraction(0)] * phi
            for k, v in enumerate(fr):
                if v:
                    row = table[k % order]
                    for i in range(phi):
                        if row[i]:
                            red[i] += v * row[i]
            fr = red
        fr = fr + [Fraction(0)] * (phi - len(fr))
        den = 1
        for v in fr:
            den = lcm(den, v.denominator)
        ints = [int(v * den) for v in fr]
        other = _make(order, ints, den)
        self.m, self.c, self.den = other.m, other.c, other.den
        self._hash = None

    @classmethod
    def _raw(cls, m, c, den):
        obj = object.__new__(cls)
        obj.m = m
        obj.c = c
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, value) -> "CyclotomicElement":
        if isinstance(value, CyclotomicElement):
            return value
        v = Fraction(value)
        return _make(1, [v.numerator], v.denominator)

    # -- basic views ---------------------------------------------------------

    @property
    def order(self) -> int:
        return self.m

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.c)

    def is_zero(self) -> bool:
        return self.c[0] == 0 and self.m == 1

    def __bool__(self) -> bool:
        return not (self.m == 1 and self.c[0] == 0)

    def is_rational(self) -> bool:
        return self.m == 1

    def to_fraction(self) -> Fraction:
        if self.m != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.c[0], self.den)

    def embed(self, order: int) -> "CyclotomicElement":
        """Same value with coordinates in Q(zeta_order); order must be a multiple of self.order."""
        coords, den = self.coords(order)
        return CyclotomicElement._raw(order, coords, den) if order > 1 else self

    def coords(self, order: int) -> tuple[tuple[int, ...], int]:
        """Integer coordinates and denominator of self inside Q(zeta_order)."""
        if order % self.m:
            raise ValueError(f"Q(zeta_{self.m}) is not contained in Q(zeta_{order})")
        if order == self.m:
            return self.c, self.den
        phi = euler_phi(order)
        step = order // self.m
        table = _power_table(order)
        out = [0] * phi
        for i, v in enumerate(self.c):
            if v:
                row = table[(i * step) % order]
                for k in range(phi):
                    if row[k]:
                        out[k] += v * row[k]
        return tuple(out), self.den

    # -- arithmetic ------------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, CyclotomicElement):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement.rational(other)
        return NotImplemented

    def _common(self, other):
        if self.m == other.m:
            return self.m, self.c, self.den, other.c, other.den
        m = lcm(self.m, other.m)
        a, ad = self.coords(m)
        b, bd = other.coords(m)
        return m, a, ad, b, bd

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.m == 1 and other.c[0] == 0:
            return self
        if self.m == 1 and self.c[0] == 0:
            return other
        m, a, ad, b, bd = self._common(other)
        if ad == bd:
            return _make(m, [x + y for x, y in zip(a, b)], ad)
        return _make(m, [x * bd + y * ad for x, y in zip(a, b)], ad * bd)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement._raw(self.m, tuple(-x for x in self.c), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.m == 1:
            k = other.c[0]
            if k == 0:
                return other
            if k == 1 and other.den == 1:
                return self
            return _make(self.m, [x * k for x in self.c], self.den * other.den)
        if self.m == 1:
            return other * self
        m, a, ad, b, bd = self._common(other)
        phi = len(a)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        table = _power_table(m)
        for k in range(phi, 2 * phi - 1):
            v = conv[k]
            if v:
                row = table[k % m]
                for i in range(phi):
                    if row[i]:
                        out[i] += v * row[i]
        return _make(m, out, ad * bd)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.m == 1:
            return _make(1, [self.den], self.c[0])
        # extended Euclid in Q[t] against Phi_m; s1 * a == r1 (mod Phi_m) throughout
        r0 = [Fraction(v) for v in cyclotomic_polynomial(self.m)]
        r1 = _trim([Fraction(v, self.den) for v in self.c])
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        return CyclotomicElement(self.m, [v / r1[0] for v in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicElement.rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "CyclotomicElement":
        """Complex conjugation, z -> z^-1."""
        if self.m == 1:
            return self
        table = _power_table(self.m)
        phi = len(self.c)
        out = [0] * phi
        for i, v in enumerate(self.c):
            if v:
                row = table[(-i) % self.m]
                for k in range(phi):
                    if row[k]:
                        out[k] += v * row[k]
        return _make(self.m, out, self.den)

    def normalized_trace(self) -> Fraction:
        if self.m == 1:
            return Fraction(self.c[0], self.den)
        tv = _trace_vector(self.m)
        return sum((v * t for v, t in zip(self.c, tv)), Fraction(0)) / self.den

    # -- comparison --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.m == 1 and Fraction(self.c[0], self.den) == other
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        if self.m == other.m:
            return self.den == other.den and self.c == other.c
        if self.m == 1 or other.m == 1:
            return False
        m = lcm(self.m, other.m)
        return self.coords(m) == other.coords(m)

    def __hash__(self):
        if self._hash is None:
            if self.m == 1:
                self._hash = hash(Fraction(self.c[0], self.den))
            else:
                self._hash = hash(("cyc", self.normalized_trace()))
        return self._hash

    def minimal_order(self) -> "CyclotomicElement":
        """Re-express in the smallest Q(zeta_d), d | m, that contains the value."""
        if self.m == 1:
            return self
        for d in _divisors(self.m):
            if d == 1 or d == self.m:
                continue
            if euler_phi(d) >= euler_phi(self.m):
                continue
            cand = self._try_descend(d)
            if cand is not None:
                return cand
        return self

    def _try_descend(self, d):
        # solve for coordinates in Q(zeta_d) by matching the embedded basis
        phi_d = euler_phi(d)
        basis = [CyclotomicElement._raw(d, tuple(1 if k == i else 0 for k in range(phi_d)), 1).coords(self.m)[0]
                 for i in range(phi_d)]
        target = [Fraction(v, self.den) for v in self.c]
        rows = [[Fraction(basis[i][k]) for i in range(phi_d)] + [target[k]] for k in range(len(target))]
        sol = _solve_overdetermined(rows, phi_d)
        if sol is None:
            return None
        return CyclotomicElement(d, sol)

    # -- printing ------------------------------------------------------------------

    def to_literal(self, order: int | None = None, var: str = "z") -> str:
        """Render in the scalar literal grammar, with ``var`` standing for zeta_order."""
        order = self.m if order is None else order
        coords, den = self.coords(order)
        terms = []
        for i, v in enumerate(coords):
            if not v:
                continue
            q = Fraction(v, den)
            if i == 0:
                body = _frac_str(abs(q))
            else:
                zpart = var if i == 1 else f"{var}^{i}"
                body = zpart if abs(q) == 1 else f"{_frac_str(abs(q))}*{zpart}"
            terms.append(("-" if q < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_literal()

    def __repr__(self):
        if self.m == 1:
            return f"CyclotomicElement({self.to_literal()})"
        return f"CyclotomicElement(m={self.m}: {self.to_literal()})"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_divmod(a, b):
    a = list(a)
    b = _trim(b)
    db = len(b) - 1
    q = [Fraction(0)] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = c / b[-1]
            q[i - db] = c
            for k in range(db + 1):
                a[i - db + k] -= c * b[k]
    return _trim(q), _trim(a[:db] or [Fraction(0)])


def _solve_overdetermined(rows, nvars):
    rows = [list(r) for r in rows]
    piv_cols = []
    r = 0
    for col in range(nvars):
        p = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][nvars] != 0:
            return None
    sol = [Fraction(0)] * nvars
    for i, col in enumerate(piv_cols):
        sol[col] = rows[i][nvars]
    return sol


def zeta(m: int, e: int = 1) -> CyclotomicElement:
    """The root of unity zeta_m^e in canonical form."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    row = _power_table(m)[e % m]
    return _make(m, list(row), 1)


# signed sums of terms c, c*z^e, z^e, c*z, z
_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+(?:\s*/\s*\d+)?)(?:\s*\*\s*(?P<z1>{v})(?:\s*\^\s*(?P<e1>-?\d+))?)?
          |
          (?P<z2>{v})(?:\s*\^\s*(?P<e2>-?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_scalar(text, order: int, var: str = "z") -> CyclotomicElement:
    """Parse a scalar literal; ``var`` denotes zeta_order."""
    if isinstance(text, bool):
        raise ScalarParseError(f"not a scalar literal: {text!r}")
    if isinstance(text, int):
        return CyclotomicElement.rational(text)
    if not isinstance(text, str):
        raise ScalarParseError(f"not a scalar literal: {text!r}")
    pattern = re.compile(_TERM.pattern.replace("{v}", re.escape(var)), re.VERBOSE)
    s = text.strip()
    if not s:
        raise ScalarParseError("empty scalar literal")
    pos = 0
    total = CyclotomicElement.rational(0)
    first = True
    while pos < len(s):
        mt = pattern.match(s, pos)
        if not mt or mt.end() == pos:
            raise ScalarParseError(f"bad scalar literal {text!r} at column {pos + 1}")
        if not first and mt.group("sign") is None:
            raise ScalarParseError(f"missing operator in {text!r} at column {pos + 1}")
        sign = -1 if mt.group("sign") == "-" else 1
        if mt.group("coef") is not None:
            try:
                coef = Fraction(mt.group("coef").replace(" ", ""))
            except ZeroDivisionError:
                raise ScalarParseError(f"zero denominator in {text!r} at column {pos + 1}") from None
            if mt.group("z1"):
                term = zeta(order, int(mt.group("e1") or 1)) * coef
            else:
                term = CyclotomicElement.rational(coef)
        else:
            term = zeta(order, int(mt.group("e2") or 1))
        total = total + term * sign
        pos = mt.end()
        first = False
    return total
