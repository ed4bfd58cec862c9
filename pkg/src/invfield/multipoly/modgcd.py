"""Multivariate gcd over Q(zeta_m) through images in F_p[x].

For each prime p = 1 mod m every embedding zeta_m -> r (r a primitive m-th
root of unity mod p) gives an image of the inputs; the gcd of each image is
found by dense evaluation and interpolation (Brown's algorithm), the
coordinates in the power basis are recovered by solving a Vandermonde system
over the conjugate images, lifted by Chinese remaindering and rational
reconstruction, and the candidate is accepted only if it divides both inputs
exactly over Q(zeta_m).
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt, lcm

from ..scalars import CyclotomicElement
from .poly import NotDivisibleError, Polynomial

_rng = random.Random(7177)


# -- dense univariate arithmetic mod p (coefficient lists, low degree first) --------


def _trim(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    return a


def _u_eval(a: list[int], t: int, p: int) -> int:
    v = 0
    for c in reversed(a):
        v = (v * t + c) % p
    return v


def _u_divmod(a: list[int], b: list[int], p: int):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _trim(a)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = c * inv % p
            q[i - db] = c
            for k in range(db + 1):
                if b[k]:
                    a[i - db + k] = (a[i - db + k] - c * b[k]) % p
    return q, _trim(a[:db])


def _u_monic(a: list[int], p: int) -> list[int]:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _u_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _u_divmod(a, b, p)[1]
    return _u_monic(a, p)


def _u_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return out


def _u_add(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


# -- multivariate images: dict exponent-tuple -> residue ------------------------------


def _split_last(f: dict) -> dict:
    """View f in F_p[y][x_0..x_{k-2}], y the last variable."""
    out: dict = {}
    for e, c in f.items():
        row = out.setdefault(e[:-1], [])
        d = e[-1]
        if len(row) <= d:
            row.extend([0] * (d + 1 - len(row)))
        row[d] = c
    return out


def _join_last(parts: dict) -> dict:
    return {pre + (d,): c for pre, row in parts.items() for d, c in enumerate(row) if c}


def _eval_last(parts: dict, t: int, p: int) -> dict:
    out = {}
    for pre, row in parts.items():
        v = _u_eval(row, t, p)
        if v:
            out[pre] = v
    return out


def _lead(f: dict):
    return max(f)


def _monic(f: dict, p: int) -> dict:
    inv = pow(f[_lead(f)], -1, p)
    return {e: c * inv % p for e, c in f.items()}


def _pgcd(a: dict, b: dict, k: int, p: int) -> dict | None:
    """Monic (lex) gcd of nonzero a, b in F_p[x_0..x_{k-1}]; None when no
    good evaluation points turn up."""
    if k == 1:
        ua = [0] * (max(e[0] for e in a) + 1)
        ub = [0] * (max(e[0] for e in b) + 1)
        for e, c in a.items():
            ua[e[0]] = c
        for e, c in b.items():
            ub[e[0]] = c
        g = _u_gcd(ua, ub, p)
        return {(d,): c for d, c in enumerate(g) if c}
    A, B = _split_last(a), _split_last(b)
    ca = _content(A, p)
    cb = _content(B, p)
    A = _divide_content(A, ca, p)
    B = _divide_content(B, cb, p)
    cont = _u_gcd(ca, cb, p)
    la, lb = A[max(A)], B[max(B)]
    gamma = _u_gcd(la, lb, p)
    dy = min(max(len(r) for r in A.values()), max(len(r) for r in B.values())) - 1
    need = dy + len(gamma)  # points needed: dy + deg(gamma) + 1
    if len(A) == 1 and not any(next(iter(A))) or len(B) == 1 and not any(next(iter(B))):
        # a primitive part is constant in the leading variables
        return _monic(_times_content({(0,) * (k - 1): [1]}, cont, p), p)
    H: dict | None = None
    lm = None
    q = [1]
    pts = 0
    tried = 0
    used = set()
    while pts < need:
        tried += 1
        if tried > 4 * need + 20:
            return None
        t = _rng.randrange(p)
        if t in used:
            continue
        used.add(t)
        if not _u_eval(la, t, p) or not _u_eval(lb, t, p):
            continue
        at, bt = _eval_last(A, t, p), _eval_last(B, t, p)
        g = _pgcd(at, bt, k - 1, p)
        if g is None:
            return None
        glm = _lead(g)
        if lm is not None and glm > lm:
            continue
        if lm is None or glm < lm:
            H, lm, q, pts = None, glm, [1], 0
        s = _u_eval(gamma, t, p)
        g = {e: c * s % p for e, c in g.items()}
        H = _newton_step(H, q, g, t, p)
        q = _u_mul(q, [(-t) % p, 1], p)
        pts += 1
    if H is None:
        return None
    H = {pre: row for pre, row in H.items() if row}
    H = _divide_content(H, _content(H, p), p)
    return _monic(_times_content(H, cont, p), p)


def _content(parts: dict, p: int) -> list[int]:
    g: list[int] = []
    for row in sorted(parts.values(), key=len):
        g = _u_gcd(g, row, p) if g else _u_monic(_trim(list(row)), p)
        if len(g) == 1:
            break
    return g


def _divide_content(parts: dict, c: list[int], p: int) -> dict:
    if len(c) <= 1:
        if c and c[0] != 1:
            inv = pow(c[0], -1, p)
            return {k: [x * inv % p for x in v] for k, v in parts.items()}
        return parts
    out = {}
    for pre, row in parts.items():
        qt, r = _u_divmod(row, c, p)
        out[pre] = _trim(qt)
    return out


def _times_content(parts: dict, c: list[int], p: int) -> dict:
    return _join_last({pre: _u_mul(row, c, p) for pre, row in parts.items()})


def _newton_step(H, q, g, t, p):
    """Interpolant agreeing with H at the old points and with g at t."""
    if H is None:
        return {pre: [c] for pre, c in g.items()}
    qt = _u_eval(q, t, p)
    inv = pow(qt, -1, p)
    out = {}
    for pre in set(H) | set(g):
        row = H.get(pre, [])
        diff = (g.get(pre, 0) - _u_eval(row, t, p)) % p
        if diff:
            row = _u_add(row, [c * diff * inv % p for c in q], p)
        out[pre] = row
    return out


# -- primes and reconstruction ----------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


_PRIME_CACHE: dict[int, list[tuple[int, int]]] = {}


def primes_for(m: int, count: int) -> list[tuple[int, int]]:
    """The first ``count`` primes p = 1 mod m above 2^61, each with a primitive
    m-th root of unity mod p."""
    have = _PRIME_CACHE.setdefault(m, [])
    k = (have[-1][0] - 1) // m + 1 if have else (1 << 61) // m + 1
    qs = _prime_factors(m)
    while len(have) < count:
        p = k * m + 1
        k += 1
        if not _is_prime(p):
            continue
        g = 2
        while True:
            r = pow(g, (p - 1) // m, p)
            if all(pow(r, m // q, p) != 1 for q in qs):
                break
            g += 1
        have.append((p, r))
    return have[:count]


def to_modp(f: Polynomial, p: int, root: int, m: int, slots=None) -> dict:
    """Image of f in F_p[x] with zeta_m -> root; exponents restricted to slots."""
    out = {}
    for mono, c in f.terms.items():
        step = pow(root, m // c.order, p)
        val, acc = 0, 1
        for x in c.c:
            if x:
                val = (val + x * acc) % p
            acc = acc * step % p
        if c.den % p == 0:
            raise ZeroDivisionError("denominator vanishes mod p")
        val = val * pow(c.den, -1, p) % p
        if val:
            out[tuple(mono[i] for i in slots) if slots is not None else mono] = val
    return out


def _rational_reconstruct(u: int, M: int) -> Fraction | None:
    bound = isqrt(M // 2)
    r0, r1 = M, u % M
    s0, s1 = 0, 1
    while r1 > bound:
        qt = r0 // r1
        r0, r1 = r1, r0 - qt * r1
        s0, s1 = s1, s0 - qt * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _solve_vandermonde(nodes: list[int], p: int) -> list[list[int]]:
    """Inverse of the matrix (nodes[j]^i) mod p, rows indexed by i."""
    n = len(nodes)
    mat = [[pow(x, i, p) for i in range(n)] + [int(j == r) for j in range(n)] for r, x in enumerate(nodes)]
    for col in range(n):
        piv = next(r for r in range(col, n) if mat[r][col])
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = pow(mat[col][col], -1, p)
        mat[col] = [v * inv % p for v in mat[col]]
        for r in range(n):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(v - f * w) % p for v, w in zip(mat[r], mat[col])]
    # mat[:, n:] is the inverse of V with V[r][i] = nodes[r]^i; coords = V^-1 values
    return [row[n:] for row in mat]


def _common_order(*polys: Polynomial) -> int:
    m = 1
    for poly in polys:
        for c in poly.terms.values():
            m = lcm(m, c.order)
    return m


def modular_gcd(a: Polynomial, b: Polynomial, max_primes: int = 8) -> Polynomial | None:
    """gcd of nonzero a, b over Q(zeta_m), or None if the images never settle."""
    from ..scalars import euler_phi

    ring = a.ring
    slots = sorted(set(a.variables()) | set(b.variables()))
    if not slots:
        return ring.one()
    m = _common_order(a, b)
    phi = euler_phi(m)
    exps = [j for j in range(1, m + 1) if gcd(j, m) == 1]
    acc_mod = 1
    acc: dict | None = None
    support = None
    for p, r in primes_for(m, max_primes):
        nodes = [pow(r, j, p) for j in exps]
        images = []
        try:
            for node in nodes:
                ia = to_modp(a, p, node, m, slots)
                ib = to_modp(b, p, node, m, slots)
                if not ia or not ib:
                    raise ZeroDivisionError
                g = _pgcd(ia, ib, len(slots), p)
                if g is None:
                    raise ZeroDivisionError
                images.append(g)
        except ZeroDivisionError:
            continue
        supp = set(images[0])
        if any(set(g) != supp for g in images[1:]):
            continue
        inv = _solve_vandermonde(nodes, p)
        coords = {e: [sum(inv[i][j] * images[j][e] for j in range(phi)) % p for i in range(phi)] for e in supp}
        key = tuple(sorted(supp))
        if support is None or key < support:
            # a smaller support means the earlier primes were unlucky
            support, acc, acc_mod = key, coords, p
        elif key > support:
            continue
        else:
            new_mod = acc_mod * p
            for e in supp:
                acc[e] = [_crt(x, acc_mod, y, p, new_mod) for x, y in zip(acc[e], coords[e])]
            acc_mod = new_mod
        cand = _reconstruct(acc, acc_mod, m, phi, ring, slots)
        if cand is not None and _divides(cand, a) and _divides(cand, b):
            return cand
    return None


def _crt(x: int, mx: int, y: int, my: int, mxy: int) -> int:
    return (x + mx * ((y - x) * pow(mx, -1, my) % my)) % mxy


def _reconstruct(acc: dict, M: int, m: int, phi: int, ring, slots) -> Polynomial | None:
    terms = {}
    n = ring.nvars
    for e, cs in acc.items():
        fr = []
        for c in cs:
            v = _rational_reconstruct(c, M)
            if v is None:
                return None
            fr.append(v)
        mono = [0] * n
        for s, d in zip(slots, e):
            mono[s] = d
        val = CyclotomicElement(m, fr) if m > 1 else CyclotomicElement.rational(fr[0])
        if val:
            terms[tuple(mono)] = val
    return Polynomial._new(ring, terms)


def _divides(g: Polynomial, f: Polynomial) -> bool:
    try:
        f.exact_div(g)
    except NotDivisibleError:
        return False
    return True
