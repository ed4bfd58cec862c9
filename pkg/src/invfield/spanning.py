"""Linear independence over the invariant field, D_span, D_reg, and a graded
copy of the regular representation whose basis spans k(V) over K."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .grouprep import EquivariantEmbedding, GradedDecomposition, IrreducibleModel, MatrixGroup
from .linalg import bareiss_rank, rank
from .multipoly import Polynomial


class SpanningError(RuntimeError):
    pass


def galois_rank(group: MatrixGroup, polys: Sequence[Polynomial], fast: bool = False,
                seed: int = 0, trials: int = 2) -> int:
    """Dimension of the K-span of polys inside k(V), K the invariant field.

    This is the rank over k(x) of the matrix (g f_i) with one row per group
    element.  With ``fast`` the matrix is first evaluated at random integer
    points; a full-rank evaluation proves independence.  Anything short of
    full rank falls back to the exact fraction-free computation.
    """
    polys = [p for p in polys if p]
    if not polys:
        return 0
    if len(polys) == 1:
        return 1
    rows = [[group.act(g, f) for f in polys] for g in range(group.order)]
    if fast:
        rng = random.Random(seed)
        for _ in range(trials):
            point = [rng.randint(-97, 97) for _ in range(group.n)]
            vals = [[p.evaluate(point) for p in row] for row in rows]
            if rank(vals) == len(polys):
                return len(polys)
    return bareiss_rank(rows)


def are_independent(group: MatrixGroup, polys: Sequence[Polynomial], fast: bool = False) -> bool:
    return galois_rank(group, polys, fast) == len(polys)


@dataclass
class RegularWitness:
    """Per model label, d_lambda embeddings whose basis images form a K-basis of k(V)."""

    embeddings: dict[str, list[EquivariantEmbedding]]
    degrees: dict[str, list[int]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.degrees:
            self.degrees = {k: [e.degree for e in v] for k, v in self.embeddings.items()}

    @property
    def max_degree(self) -> int:
        return max((d for ds in self.degrees.values() for d in ds), default=0)

    def basis_polys(self) -> list[Polynomial]:
        """All psi_i(v_j), grouped by label, then embedding, then basis index."""
        return [img for embs in self.embeddings.values() for e in embs for img in e.images]

    def dimension(self) -> int:
        return sum(len(e.images) for embs in self.embeddings.values() for e in embs)


@dataclass
class SpanReport:
    D_span: int
    D_reg: int
    witness: RegularWitness
    profile: list[int]
    rank_profile: dict[str, list[int]]
    group_order: int

    def profile_strictly_increasing(self) -> bool:
        """Strict growth until the group order is reached, constant afterwards."""
        p = self.profile
        for a, b in zip(p, p[1:]):
            if a < self.group_order and not b > a:
                return False
            if a >= self.group_order and b != a:
                return False
        return bool(p) and p[-1] == self.group_order


def _greedy_per_model(dec: GradedDecomposition, model: IrreducibleModel, max_degree: int, fast: bool):
    """Independent embeddings taken greedily by degree, then canonical order.

    Returns (chosen, ranks) with ranks[d] the K-rank reached through degree d.
    """
    chosen: list[EquivariantEmbedding] = []
    ranks: list[int] = []
    G = dec.group
    for d in range(max_degree + 1):
        if len(chosen) < model.degree:
            for e in dec.embeddings(model, d):
                lead = [c.images[0] for c in chosen] + [e.images[0]]
                if are_independent(G, lead, fast):
                    chosen.append(e)
                    if len(chosen) == model.degree:
                        break
        ranks.append(len(chosen))
    return chosen, ranks


def compute_Dreg(dec: GradedDecomposition) -> int:
    """Least d such that every model occurs at least d_lambda times in degrees <= d."""
    G = dec.group
    totals = {m.label: 0 for m in dec.models}
    for d in range(G.order):
        for m in dec.models:
            totals[m.label] += dec.multiplicity(m, d)
        if all(totals[m.label] >= m.degree for m in dec.models):
            return d
    raise SpanningError("regular representation not reached by degree |G| - 1")


def compute_Dspan(dec: GradedDecomposition, fast: bool = False):
    """D_span together with the per-model rank profiles and the greedy choices."""
    G = dec.group
    limit = G.order - 1
    per_model = {}
    D = 0
    for m in dec.models:
        chosen, ranks = _greedy_per_model(dec, m, limit, fast)
        if len(chosen) < m.degree:
            raise SpanningError(
                f"model {m.label!r} has K-rank {len(chosen)} < {m.degree} through degree {limit}; "
                "is the action faithful?"
            )
        need = next(d for d, r in enumerate(ranks) if r == m.degree)
        D = max(D, need)
        per_model[m.label] = (chosen, ranks)
    return D, per_model


def select_Vreg(dec: GradedDecomposition, D_span: int, fast: bool = False,
                greedy: dict | None = None) -> RegularWitness:
    """Choose d_lambda independent embeddings per model, all of degree <= D_span.

    A model's embeddings are taken from the lowest single degree that already
    holds d_lambda independent ones; when no degree does, the greedy by-degree
    choice is used.
    """
    G = dec.group
    out: dict[str, list[EquivariantEmbedding]] = {}
    for m in dec.models:
        picked = None
        for d in range(D_span + 1):
            embs = dec.embeddings(m, d)
            if len(embs) < m.degree:
                continue
            block: list[EquivariantEmbedding] = []
            for e in embs:
                if are_independent(G, [c.images[0] for c in block] + [e.images[0]], fast):
                    block.append(e)
                    if len(block) == m.degree:
                        break
            if len(block) == m.degree:
                picked = block
                break
        if picked is None:
            if greedy is not None and m.label in greedy:
                picked = greedy[m.label][0]
            else:
                picked, _ = _greedy_per_model(dec, m, D_span, fast)
        out[m.label] = picked
    return RegularWitness(out)


def analyze_spanning(group: MatrixGroup, models: Sequence[IrreducibleModel], fast: bool = False,
                     dec: GradedDecomposition | None = None) -> SpanReport:
    dec = dec or GradedDecomposition(group, models)
    D_reg = compute_Dreg(dec)
    D_span, per_model = compute_Dspan(dec, fast)
    witness = select_Vreg(dec, D_span, fast, per_model)
    profile = []
    for d in range(D_span + 1):
        profile.append(sum(m.degree * per_model[m.label][1][d] for m in dec.models))
    rank_profile = {label: ranks[: D_span + 1] for label, (_, ranks) in per_model.items()}
    return SpanReport(D_span, D_reg, witness, profile, rank_profile, group.order)


def certify_full_rank(group: MatrixGroup, polys: Sequence[Polynomial], points: int = 3, seed: int = 0) -> bool:
    """Exact proof that polys are K-independent.

    A nonsingular exact evaluation of the matrix (g f_i) at one point shows a
    maximal minor is a nonzero polynomial, so independence follows.  Only if
    every tried point is degenerate is the fraction-free rank computed.
    """
    polys = list(polys)
    if any(not p for p in polys):
        return False
    rows = [[group.act(g, f) for f in polys] for g in range(group.order)]
    rng = random.Random(seed)
    for _ in range(points):
        point = [rng.randint(-97, 97) for _ in range(group.n)]
        if rank([[p.evaluate(point) for p in row] for row in rows]) == len(polys):
            return True
    return bareiss_rank(rows) == len(polys)


def verify_witness(group: MatrixGroup, witness: RegularWitness) -> bool:
    """The |G| witness basis polynomials are independent over K."""
    polys = witness.basis_polys()
    return len(polys) == group.order and certify_full_rank(group, polys)
