"""Independent reference computations built on sympy.

The orbit-ideal oracle works straight from the definition: F = sum c_a X^a
lies in the kernel of X -> x exactly when sum c_a (g x)^a = 0 for every group
element g, a linear system over k(x) in the unknowns c_a.  The group elements
are listed by hand, so nothing here depends on the package's enumeration,
decompositions or matrix equations.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import sympy as sp
from sympy.polys.matrices import DomainMatrix

from invfield.multipoly import PolyRing, Polynomial, RationalFunction, xpoly_ring
from invfield.scalars import zeta

W3 = (-1 + sp.sqrt(3) * sp.I) / 2


def monomials_up_to(nvars: int, maxdeg: int):
    return [a for d in range(maxdeg + 1) for a in itertools.product(range(d + 1), repeat=nvars) if sum(a) == d]


def kernel_of_xi(elements, nvars: int, maxdeg: int, ext=None):
    """Basis of the k(x)-nullspace of the matrix (g x^a), rows g, columns |a| <= maxdeg.

    Returns (monomials, rows, K) with rows a list of sympy field elements.
    """
    xs = sp.symbols(f"x1:{nvars + 1}")
    base = sp.QQ.algebraic_field(ext) if ext is not None else sp.QQ
    K = base.frac_field(*xs)
    gx = [K.from_sympy(x) for x in xs]
    monos = monomials_up_to(nvars, maxdeg)
    rows = []
    for g in elements:
        img = [sum((K.convert_from(base.from_sympy(sp.sympify(g[i][j])), base) * gx[j] for j in range(nvars)), K.zero)
               for i in range(nvars)]
        row = []
        for a in monos:
            v = K.one
            for i in range(nvars):
                v = v * img[i] ** a[i]
            row.append(v)
        rows.append(row)
    ns = DomainMatrix(rows, (len(rows), len(monos)), K).nullspace()
    out = [[ns[r, c].element for c in range(len(monos))] for r in range(ns.shape[0])]
    return monos, out, base


def _scalar(c, base, m: int):
    if base == sp.QQ:
        return Fraction(int(c.numerator), int(c.denominator))
    rep = [Fraction(int(q.numerator), int(q.denominator)) for q in c.to_list()]
    z = zeta(m)
    total = zeta(m, 0) * 0
    for k, q in enumerate(reversed(rep)):
        total = total + z ** k * q
    return total


def _poly(p, ring: PolyRing, base, m: int) -> Polynomial:
    terms = {}
    for mono, c in p.terms():
        terms[tuple(mono)] = ring.field.convert(_scalar(c, base, m))
    return Polynomial(ring, terms)


def oracle_ideal(ring: PolyRing, elements, maxdeg: int, ext=None, m: int = 1) -> list[Polynomial]:
    """Generators of the kernel of Xi in degree <= maxdeg, as package X-polynomials."""
    monos, rows, base = kernel_of_xi(elements, ring.nvars, maxdeg, ext)
    xring = xpoly_ring(ring)
    out = []
    for row in rows:
        terms = {}
        for a, v in zip(monos, row):
            if v:
                num = _poly(v.numer, ring, base, m)
                den = _poly(v.denom, ring, base, m)
                terms[a] = RationalFunction(num, den)
        if terms:
            out.append(Polynomial(xring, terms))
    return out
