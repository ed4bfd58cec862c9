"""Polynomials in X_1..X_n with coefficients in k(x_1..x_n)."""
from __future__ import annotations

from .poly import Polynomial, PolyRing
from .ratfunc import RationalFunction, RationalFunctionField


def x_names(names) -> tuple[str, ...]:
    out = tuple(n.upper() if n.upper() != n else n + "_X" for n in names)
    if set(out) & set(names):
        out = tuple(n + "_X" for n in names)
    return out


def xpoly_ring(base: PolyRing, order=None, names=None) -> PolyRing:
    """The ring K[X] over the fraction field of ``base``; X_j mirrors x_j."""
    names = tuple(names) if names is not None else x_names(base.names)
    if len(names) != base.nvars:
        raise ValueError("need one X variable per x variable")
    return PolyRing(names, RationalFunctionField(base), order if order is not None else base.order)


def as_ratfunc(f: Polynomial) -> RationalFunction:
    return RationalFunction._raw(f, f.ring.one())


def lift_to_X(f: Polynomial, xring: PolyRing) -> Polynomial:
    """Rename x_j to X_j: the same polynomial with scalar coefficients in K[X]."""
    base = xring.field.base
    return Polynomial._new(xring, {m: RationalFunction._raw(base.const(c), base.one()) for m, c in f.terms.items()})


def xi(F: Polynomial) -> RationalFunction:
    """Specialize X_j to x_j, giving an element of k(x)."""
    base = F.ring.field.base
    total = None
    for m, c in F.terms.items():
        t = c * base.monomial(m)
        total = t if total is None else total + t
    if total is None:
        return RationalFunction._raw(base.zero(), base.one())
    return total


def clear_denominators(F: Polynomial) -> Polynomial:
    """A k(x)-multiple of F whose coefficients are polynomials."""
    from .gcd import poly_gcd

    den = None
    for c in F.terms.values():
        if den is None:
            den = c.den
        elif not c.den.is_constant():
            den = den * c.den.exact_div(poly_gcd(den, c.den))
    if den is None or den.is_constant():
        return F
    return F * RationalFunction._raw(den, den.ring.one())
