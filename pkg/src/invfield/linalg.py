"""Exact linear algebra over fields, and fraction-free rank over polynomial rings."""
from __future__ import annotations

from typing import Callable, Sequence


def rref(rows: Sequence[Sequence], pivot_key: Callable | None = None):
    """Reduced row echelon form over a field.

    Returns (matrix, pivot_columns).  ``pivot_key`` ranks candidate pivots in a
    column (smaller is preferred); by default the first nonzero entry is used.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(m):
            break
        cands = [i for i in range(r, len(m)) if m[i][col]]
        if not cands:
            continue
        p = min(cands, key=lambda i: pivot_key(m[i][col])) if pivot_key else cands[0]
        m[r], m[p] = m[p], m[r]
        piv = m[r][col]
        if piv != 1:
            inv = 1 / piv
            m[r] = [v * inv if v else v for v in m[r]]
        row = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][col]
                if f:
                    m[i] = [a - f * b if b else a for a, b in zip(m[i], row)]
        pivots.append(col)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence], pivot_key: Callable | None = None) -> int:
    return len(rref(rows, pivot_key)[1])


def nullspace(rows: Sequence[Sequence], zero, one, pivot_key: Callable | None = None) -> list[list]:
    """Basis of {v : rows * v = 0}, one vector per free column (that entry set to one)."""
    if not rows:
        raise ValueError("nullspace needs at least one row to fix the column count")
    ncols = len(rows[0])
    m, pivots = rref(rows, pivot_key)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, pc in enumerate(pivots):
            if m[r][f]:
                v[pc] = -m[r][f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, zero, pivot_key: Callable | None = None):
    """One solution of rows * v = rhs (free variables zero), or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if not aug:
        return []
    ncols = len(aug[0]) - 1
    m, pivots = rref(aug, pivot_key)
    if ncols in pivots:
        return None
    v = [zero] * ncols
    for r, pc in enumerate(pivots):
        v[pc] = m[r][ncols]
    return v


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix of polynomials via fraction-free elimination.

    Entries must support +, -, * and exact_div; every division is exact.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = None
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        cands = [i for i in range(r, nrows) if m[i][col]]
        if not cands:
            continue
        p = min(cands, key=lambda i: len(m[i][col]))
        m[r], m[p] = m[p], m[r]
        piv = m[r][col]
        for i in range(r + 1, nrows):
            a = m[i][col]
            row = m[i]
            for j in range(col + 1, ncols):
                v = piv * row[j]
                if a and m[r][j]:
                    v = v - a * m[r][j]
                if prev is not None and v:
                    v = v.exact_div(prev)
                row[j] = v
            row[col] = piv.ring.zero()
        prev = piv
        r += 1
    return r
