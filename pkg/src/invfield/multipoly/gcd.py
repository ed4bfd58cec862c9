"""Multivariate gcd over a field by recursive primitive remainder sequences."""
from __future__ import annotations

import random

from .modgcd import modular_gcd, primes_for, to_modp
from .poly import NotDivisibleError, Polynomial


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd of a and b; gcd(0, b) is monic b and gcd(0, 0) is 0."""
    a._check(b)
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    ring = a.ring
    if a.is_constant() or b.is_constant():
        return ring.one()
    ma, mb = _min_exponents(a), _min_exponents(b)
    shared = tuple(min(x, y) for x, y in zip(ma, mb))
    if any(ma):
        a = a.exact_div(ring.monomial(ma))
    if any(mb):
        b = b.exact_div(ring.monomial(mb))
    if _certainly_coprime(a, b):
        g = ring.one()
    else:
        g = _gcd(a, b)
    if any(shared):
        g = g.mul_term(shared, 1)
    return g.monic()


def poly_gcd_many(polys) -> Polynomial:
    polys = [p for p in polys if p]
    if not polys:
        raise ValueError("gcd of no nonzero polynomials")
    # cheapest first: small polynomials cut the gcd down early
    polys.sort(key=len)
    g = polys[0].monic()
    for p in polys[1:]:
        if g.is_constant():
            break
        g = poly_gcd(g, p)
    return g


def _min_exponents(p: Polynomial):
    it = iter(p.terms)
    low = list(next(it))
    for m in it:
        for i, e in enumerate(m):
            if e < low[i]:
                low[i] = e
    return tuple(low)


def _gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """gcd of nonzero a, b, neither carrying a monomial factor; result not normalized."""
    ring = a.ring
    if a.is_constant() or b.is_constant():
        return ring.one()
    if a.is_monomial() or b.is_monomial():
        return ring.one()
    va, vb = set(a.variables()), set(b.variables())
    only_a = va - vb
    if only_a:
        return _gcd_with_content(a, b, min(only_a))
    only_b = vb - va
    if only_b:
        return _gcd_with_content(b, a, min(only_b))
    if len(b) <= len(a):
        q = _try_div(a, b)
        if q is not None:
            return b
    else:
        q = _try_div(b, a)
        if q is not None:
            return a
    g = modular_gcd(a, b)
    if g is not None:
        return g
    v = min(va, key=lambda i: (max(a.degree_in(i), b.degree_in(i)), i))
    ua, ub = _as_univariate(a, v), _as_univariate(b, v)
    ca = poly_gcd_many(list(ua.values()))
    cb = poly_gcd_many(list(ub.values()))
    if not ca.is_constant():
        ua = {d: c.exact_div(ca) for d, c in ua.items()}
    if not cb.is_constant():
        ub = {d: c.exact_div(cb) for d, c in ub.items()}
    content = poly_gcd(ca, cb)
    prim = _primitive_prs(ua, ub, v, ring)
    return prim * content


def _gcd_with_content(a, b, v):
    """gcd when v occurs in a but not b: the gcd divides every v-coefficient of a."""
    g = b
    for c in _as_univariate(a, v).values():
        g = poly_gcd(g, c)
        if g.is_constant():
            break
    return g


def _try_div(a, b):
    try:
        return a.exact_div(b)
    except NotDivisibleError:
        return None


def _as_univariate(p: Polynomial, v: int) -> dict[int, Polynomial]:
    parts: dict[int, dict] = {}
    for m, c in p.terms.items():
        d = m[v]
        mm = m[:v] + (0,) + m[v + 1:]
        parts.setdefault(d, {})[mm] = c
    return {d: Polynomial._new(p.ring, t) for d, t in parts.items()}


def _from_univariate(u: dict[int, Polynomial], v: int, ring) -> Polynomial:
    out = {}
    for d, c in u.items():
        for m, x in c.terms.items():
            out[m[:v] + (m[v] + d,) + m[v + 1:]] = x
    return Polynomial._new(ring, out)


def _primitive_prs(ua, ub, v, ring) -> Polynomial:
    if max(ua) < max(ub):
        ua, ub = ub, ua
    while True:
        if max(ub) == 0:
            return ring.one()
        r = _prem(ua, ub)
        if not r:
            return _from_univariate(ub, v, ring)
        cont = poly_gcd_many(list(r.values()))
        if not cont.is_constant():
            r = {d: c.exact_div(cont) for d, c in r.items()}
        # a scalar normalization keeps rational coefficients from growing
        top = r[max(r)]
        lc = top.leading_coeff()
        if lc != 1:
            inv = 1 / lc
            r = {d: c.scale(inv) for d, c in r.items()}
        ua, ub = ub, r


def _prem(ua, ub):
    """Sparse pseudo-remainder of ua by ub in R[v]."""
    db = max(ub)
    lb = ub[db]
    r = dict(ua)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        shift = dr - db
        new = {}
        for d, c in r.items():
            new[d] = c * lb
        for d, c in ub.items():
            k = d + shift
            t = c * lr
            cur = new.get(k)
            new[k] = -t if cur is None else cur - t
        r = {d: c for d, c in new.items() if c}
    return r


# -- coprimality certificate -------------------------------------------------------

_rng = random.Random(20240607)


def _certainly_coprime(a: Polynomial, b: Polynomial, tries: int = 2) -> bool:
    """True only if gcd(a, b) is constant; False means "unknown".

    Coefficients are mapped to F_p with p = 1 mod m (zeta_m going to an m-th
    root of unity mod p) and, for each shared variable v, the other variables
    are set to random residues at which both leading coefficients in v
    survive.  Over the local ring at a prime above p a gcd g of a and b is a
    primitive divisor of both, so its image divides both images with the same
    v-degree; a constant univariate gcd mod p proves deg_v(g) = 0.
    """
    shared = set(a.variables()) & set(b.variables())
    if not shared:
        return True
    m = _common_order(a, b)
    p, root = _prime_for(m)
    try:
        ma = _to_modp(a, p, root, m)
        mb = _to_modp(b, p, root, m)
    except ZeroDivisionError:
        return False
    for v in sorted(shared):
        for _ in range(tries):
            point = [_rng.randrange(1, p) for _ in range(a.ring.nvars)]
            pa = _specialize(ma, v, point, p)
            pb = _specialize(mb, v, point, p)
            if len(pa) - 1 != a.degree_in(v) or len(pb) - 1 != b.degree_in(v):
                continue
            if _gcd_degree_modp(pa, pb, p) == 0:
                break
        else:
            return False
    return True


def _common_order(a: Polynomial, b: Polynomial) -> int:
    from math import lcm

    m = 1
    for poly in (a, b):
        for c in poly.terms.values():
            m = lcm(m, getattr(c, "order", 1))
    return m


def _prime_for(m: int) -> tuple[int, int]:
    return primes_for(m, 1)[0]


def _to_modp(f: Polynomial, p: int, root: int, m: int) -> dict:
    return to_modp(f, p, root, m)


def _specialize(f: dict, v: int, point, p: int) -> list[int]:
    """Dense univariate image in x_v after substituting point for the other variables."""
    deg = max((mono[v] for mono in f), default=0)
    out = [0] * (deg + 1)
    for mono, c in f.items():
        val = c
        for i, e in enumerate(mono):
            if e and i != v:
                val = val * pow(point[i], e, p) % p
        out[mono[v]] = (out[mono[v]] + val) % p
    while len(out) > 1 and not out[-1]:
        out.pop()
    return out


def _gcd_degree_modp(a: list[int], b: list[int], p: int) -> int:
    if len(a) < len(b):
        a, b = b, a
    while any(b):
        a, b = b, _rem_modp(a, b, p)
    return len(a) - 1


def _rem_modp(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = c * inv % p
            for k in range(db + 1):
                if b[k]:
                    a[i - db + k] = (a[i - db + k] - c * b[k]) % p
    a = a[:db] or [0]
    while len(a) > 1 and not a[-1]:
        a.pop()
    return a
