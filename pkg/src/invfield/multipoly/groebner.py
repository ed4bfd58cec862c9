"""Multivariate division and reduced Groebner bases over any exact field."""
from __future__ import annotations

from typing import Iterable, Sequence

from .orders import TermOrder, as_order
from .poly import Polynomial, mono_divides, mono_lcm

INFINITE = "infinite"
"""Returned by standard_monomials when the quotient is not finite-dimensional."""


def _order_for(polys: Sequence[Polynomial], order) -> TermOrder:
    if order is not None:
        return as_order(order)
    for p in polys:
        return p.ring.order
    return as_order(None)


def divide(f: Polynomial, basis: Sequence[Polynomial], order=None):
    """Multivariate division: returns (quotients, remainder) with f = sum q_i*b_i + r.

    At each step the leading term is divided by the first basis element whose
    leading monomial divides it; otherwise it moves to the remainder.
    """
    if any(not b for b in basis):
        raise ValueError("division by a zero polynomial")
    order = _order_for([f, *basis], order)
    key = order.key
    ring = f.ring
    leads = [b.leading_term(order) for b in basis]
    invs = [1 / c if c != 1 else None for _, c in leads]
    quots: list[dict] = [{} for _ in basis]
    rem: dict = {}
    p = dict(f.terms)
    while p:
        lm = max(p, key=key)
        lc = p[lm]
        for i, (bm, _) in enumerate(leads):
            if mono_divides(bm, lm):
                t = tuple(a - b for a, b in zip(lm, bm))
                c = lc if invs[i] is None else lc * invs[i]
                q = quots[i]
                q[t] = q[t] + c if t in q else c
                _sub_scaled(p, basis[i].terms, t, c)
                break
        else:
            rem[lm] = p.pop(lm)
    q_polys = [Polynomial._new(ring, {m: c for m, c in q.items() if c}) for q in quots]
    return q_polys, Polynomial._new(ring, rem)


def _sub_scaled(p: dict, terms: dict, shift, c):
    """p -= c * x^shift * terms, in place."""
    for m, v in terms.items():
        mm = tuple(a + b for a, b in zip(m, shift))
        w = p.get(mm)
        if w is None:
            p[mm] = -(v * c)
        else:
            w = w - v * c
            if w:
                p[mm] = w
            else:
                del p[mm]


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order=None) -> Polynomial:
    """Fully reduced remainder of f modulo basis; basis elements must be nonzero."""
    order = _order_for([f, *basis], order)
    key = order.key
    leads = []
    for b in basis:
        bm, bc = b.leading_term(order)
        leads.append((bm, None if bc == 1 else 1 / bc, b.terms))
    rem: dict = {}
    p = dict(f.terms)
    while p:
        lm = max(p, key=key)
        for bm, inv, terms in leads:
            if mono_divides(bm, lm):
                c = p[lm] if inv is None else p[lm] * inv
                t = tuple(a - b for a, b in zip(lm, bm))
                _sub_scaled(p, terms, t, c)
                # the leading term cancels exactly; guard against inexact fields
                p.pop(lm, None)
                break
        else:
            rem[lm] = p.pop(lm)
    return Polynomial._new(f.ring, rem)


def spoly(f: Polynomial, g: Polynomial, order=None) -> Polynomial:
    order = _order_for([f, g], order)
    fm, fc = f.leading_term(order)
    gm, gc = g.leading_term(order)
    lcm = mono_lcm(fm, gm)
    a = f.mul_term(tuple(x - y for x, y in zip(lcm, fm)), 1 / fc)
    b = g.mul_term(tuple(x - y for x, y in zip(lcm, gm)), 1 / gc)
    return a - b


def buchberger(gens: Iterable[Polynomial], order=None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by gens, monic and sorted
    by leading monomial, largest first.  The zero ideal gives [].

    The working basis is kept interreduced: a new element evicts every
    element whose leading monomial it divides (those go back to the queue)
    and the tails of the rest are reduced against it.  Over coefficient
    fields like k(x) this keeps intermediate coefficients from swelling.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    order = _order_for(gens, order)
    key = order.key
    basis: dict[int, Polynomial] = {}
    lms: dict[int, tuple] = {}
    pairs: set[tuple[int, int]] = set()
    todo: list[Polynomial] = sorted(gens, key=lambda p: key(p.leading_monomial(order)))
    counter = 0

    def reduce_and_add(f: Polynomial) -> bool:
        nonlocal counter
        h = normal_form(f, list(basis.values()), order)
        if not h:
            return True
        if h.is_constant():
            return False
        h = h.monic(order)
        lm = h.leading_monomial(order)
        for k in [k for k, m in lms.items() if mono_divides(lm, m)]:
            todo.append(basis.pop(k))
            del lms[k]
            pairs.difference_update({pr for pr in pairs if k in pr})
        for k, g in list(basis.items()):
            if any(mono_divides(lm, m) for m in g.terms):
                basis[k] = normal_form(g, [b for kk, b in basis.items() if kk != k] + [h], order).monic(order)
        idx = counter
        counter += 1
        for k in basis:
            pairs.add((k, idx))
        basis[idx] = h
        lms[idx] = lm
        return True

    while todo or pairs:
        if todo:
            todo.sort(key=lambda p: key(p.leading_monomial(order)))
            if not reduce_and_add(todo.pop(0)):
                return [gens[0].ring.one()]
            continue
        i, j = min(pairs, key=lambda ij: (key(mono_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.discard((i, j))
        lcm = mono_lcm(lms[i], lms[j])
        if all(a == 0 or b == 0 for a, b in zip(lms[i], lms[j])):
            continue
        if _chain_criterion(i, j, lcm, lms, pairs):
            continue
        if not reduce_and_add(spoly(basis[i], basis[j], order)):
            return [gens[0].ring.one()]
    return _reduce_basis(list(basis.values()), order)


def _chain_criterion(i, j, lcm, lms, pending) -> bool:
    for k, mk in lms.items():
        if k == i or k == j:
            continue
        if not mono_divides(mk, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _reduce_basis(basis: list[Polynomial], order: TermOrder) -> list[Polynomial]:
    key = order.key
    basis = sorted(basis, key=lambda p: key(p.leading_monomial(order)))
    minimal: list[Polynomial] = []
    for p in basis:
        lm = p.leading_monomial(order)
        if not any(mono_divides(q.leading_monomial(order), lm) for q in minimal):
            minimal.append(p)
    out = []
    for idx, p in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        out.append(normal_form(p, others, order).monic(order))
    out.sort(key=lambda p: key(p.leading_monomial(order)), reverse=True)
    return out


def is_groebner(basis: Sequence[Polynomial], order=None) -> bool:
    """Every S-polynomial reduces to zero."""
    basis = [b for b in basis if b]
    order = _order_for(basis, order)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(spoly(basis[i], basis[j], order), basis, order):
                return False
    return True


def ideal_contains(gb: Sequence[Polynomial], f: Polynomial, order=None) -> bool:
    if not f:
        return True
    if not gb:
        return False
    return not normal_form(f, gb, order)


def standard_monomials(gb: Sequence[Polynomial], order=None, limit: int | None = None):
    """Monomials outside the initial ideal, ascending in the order, or INFINITE.

    The unit ideal gives []; the zero ideal, or any ideal missing a pure power
    of some variable among its leading monomials, gives INFINITE.
    """
    gb = [g for g in gb if g]
    if not gb:
        return INFINITE
    order = _order_for(gb, order)
    nvars = gb[0].ring.nvars
    leads = [g.leading_monomial(order) for g in gb]
    if any(not any(m) for m in leads):
        return []
    for v in range(nvars):
        if not any(m[v] > 0 and all(e == 0 for k, e in enumerate(m) if k != v) for m in leads):
            return INFINITE
    seen = {(0,) * nvars}
    frontier = [(0,) * nvars]
    while frontier:
        nxt = []
        for m in frontier:
            for v in range(nvars):
                c = m[:v] + (m[v] + 1,) + m[v + 1:]
                if c in seen or any(mono_divides(lm, c) for lm in leads):
                    continue
                seen.add(c)
                nxt.append(c)
                if limit is not None and len(seen) > limit:
                    raise OverflowError("standard monomial count exceeds limit")
        frontier = nxt
    return sorted(seen, key=order.key)


class GroebnerBasis:
    """A reduced Groebner basis together with its order."""

    def __init__(self, gens: Iterable[Polynomial], order=None):
        gens = list(gens)
        self.order = _order_for(gens, order)
        self.polys = buchberger(gens, self.order)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def leading_monomials(self):
        return [p.leading_monomial(self.order) for p in self.polys]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.polys, self.order)

    def contains(self, f: Polynomial) -> bool:
        return ideal_contains(self.polys, f, self.order)

    def standard_monomials(self, limit: int | None = None):
        return standard_monomials(self.polys, self.order, limit)
