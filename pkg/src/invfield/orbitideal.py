"""The generic orbit ideal: relations among polynomial embeddings over the
invariant field, solved through Reynolds matrix equations, and the degree
D_I at which those relations generate the whole ideal."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .grouprep import EquivariantEmbedding, GradedDecomposition, IrreducibleModel, dual_model
from .linalg import bareiss_rank, nullspace, rank, solve
from .multipoly import (
    INFINITE,
    PolyRing,
    Polynomial,
    RationalFunction,
    as_order,
    buchberger,
    lift_to_X,
    standard_monomials,
    xi,
    xpoly_ring,
)
from .spanning import RegularWitness


class OrbitIdealError(RuntimeError):
    pass


def _rf(p: Polynomial) -> RationalFunction:
    return RationalFunction._raw(p, p.ring.one())


def _rf_cost(r: RationalFunction):
    return (r.degree_bound(), len(r.num) + len(r.den))


# -- matrix equations -----------------------------------------------------------


def _candidate_multipliers(dec: GradedDecomposition, model: IrreducibleModel, witness: RegularWitness):
    """Witness basis polynomials, dual component first, then everything, then products."""
    try:
        dual = dual_model(model, dec.models)
    except Exception:
        dual = None
    seen = set()
    if dual is not None:
        for e in witness.embeddings.get(dual.label, []):
            for img in e.images:
                if img not in seen:
                    seen.add(img)
                    yield img
    basis = witness.basis_polys()
    for img in basis:
        if img not in seen:
            seen.add(img)
            yield img
    for a, b in itertools.combinations_with_replacement(basis, 2):
        p = a * b
        if p not in seen:
            seen.add(p)
            yield p


def find_multipliers(dec: GradedDecomposition, model: IrreducibleModel, witness: RegularWitness,
                     k: int = 0) -> list[Polynomial]:
    """d_lambda polynomials h_i making the matrix (R(h_i psi_l(v_k))) nonsingular.

    Candidates are added greedily whenever they raise the rank.
    """
    G = dec.group
    psis = [e.images[k] for e in witness.embeddings[model.label]]
    chosen: list[Polynomial] = []
    rows: list[list[Polynomial]] = []
    for h in _candidate_multipliers(dec, model, witness):
        row = [G.reynolds(h * p) for p in psis]
        if not any(row):
            continue
        if bareiss_rank(rows + [row]) > len(rows):
            chosen.append(h)
            rows.append(row)
            if len(chosen) == model.degree:
                return chosen
    raise OrbitIdealError(f"no nonsingular multiplier set found for {model.label!r}")


@dataclass
class MatrixEquationRecord:
    """One solve of R(h_i phi(v_k)) = sum_l R(h_i psi_l(v_k)) a_l."""

    label: str
    target: EquivariantEmbedding
    basis_index: int
    multipliers: list[Polynomial]
    lhs: list[Polynomial]
    matrix: list[list[Polynomial]]
    solution: list[RationalFunction]

    def entry_degree(self) -> int:
        degs = [int(p.degree()) for p in self.lhs if p] + [int(p.degree()) for row in self.matrix for p in row if p]
        return max(degs, default=0)

    def invariants(self) -> list[Polynomial]:
        """Nonzero, non-constant entries of the equation; all are invariant polynomials."""
        out = []
        for p in self.lhs + [q for row in self.matrix for q in row]:
            if p and not p.is_constant():
                out.append(p)
        return out


def solve_coefficients(dec: GradedDecomposition, model: IrreducibleModel, target: EquivariantEmbedding,
                       witness: RegularWitness, multipliers: list[Polynomial] | None = None,
                       k: int = 0) -> MatrixEquationRecord:
    """Express target = sum_l a_l psi_l with a_l invariant, solving at basis index k
    and checking the identity at every basis index."""
    G = dec.group
    psis = witness.embeddings[model.label]
    hs = multipliers or find_multipliers(dec, model, witness, k)
    matrix = [[G.reynolds(h * e.images[k]) for e in psis] for h in hs]
    lhs = [G.reynolds(h * target.images[k]) for h in hs]
    zero = _rf(G.ring.zero())
    sol = solve([[_rf(p) for p in row] for row in matrix], [_rf(p) for p in lhs], zero, pivot_key=_rf_cost)
    if sol is None or rank([[_rf(p) for p in row] for row in matrix]) != len(psis):
        raise OrbitIdealError(f"singular matrix equation for {model.label!r}")
    for j in range(model.degree):
        total = -_rf(target.images[j])
        for a, e in zip(sol, psis):
            if a:
                total = total + a * _rf(e.images[j])
        if total:
            raise OrbitIdealError(f"solved coefficients fail at basis index {j} for {model.label!r}")
    return MatrixEquationRecord(model.label, target, k, hs, lhs, matrix, sol)


# -- generators ---------------------------------------------------------------------


@dataclass
class OrbitIdealGenerator:
    xpoly: Polynomial
    label: str
    source: str
    basis_index: int
    degree: int

    @property
    def coefficient_degree(self) -> int:
        return max((c.degree_bound() for c in self.xpoly.terms.values()), default=0)

    def coefficients(self) -> list[RationalFunction]:
        return list(self.xpoly.terms.values())


def _same_embedding(a: EquivariantEmbedding, b: EquivariantEmbedding) -> bool:
    return a.degree == b.degree and a.images == b.images


@dataclass
class _ModelRelations:
    """All embeddings of one model up to some degree, with witness coordinates."""

    model: IrreducibleModel
    embeddings: list[EquivariantEmbedding]
    coords: list[list[RationalFunction]]
    records: list[MatrixEquationRecord]


def _model_relations(dec: GradedDecomposition, model: IrreducibleModel, witness: RegularWitness,
                     max_degree: int, cache: dict) -> _ModelRelations:
    psis = witness.embeddings[model.label]
    ring = dec.group.ring
    embs = list(psis)
    coords = []
    for i in range(len(psis)):
        coords.append([_rf(ring.one()) if k == i else _rf(ring.zero()) for k in range(len(psis))])
    records = []
    hs = None
    for d in range(max_degree + 1):
        for e in dec.embeddings(model, d):
            if any(_same_embedding(e, p) for p in psis):
                continue
            key = (model.label, d, tuple(e.images))
            rec = cache.get(key)
            if rec is None:
                if hs is None:
                    hs = find_multipliers(dec, model, witness)
                rec = solve_coefficients(dec, model, e, witness, hs)
                cache[key] = rec
            embs.append(e)
            coords.append(rec.solution)
            records.append(rec)
    return _ModelRelations(model, embs, coords, records)


def _relations_up_to(rel: _ModelRelations, e: int) -> list[list[RationalFunction]]:
    """K-linear relations among the model's embeddings of degree <= e.

    Returned as coefficient vectors over rel.embeddings (zero outside degree <= e).
    Witness embeddings come first, so when they are all present each relation
    has the shape phi - sum a_l psi_l.
    """
    idx = [i for i, emb in enumerate(rel.embeddings) if emb.degree <= e]
    if not idx:
        return []
    ring = rel.embeddings[0].images[0].ring
    zero, one = _rf(ring.zero()), _rf(ring.one())
    # columns are embeddings, rows are witness coordinates
    nrows = len(rel.coords[0])
    mat = [[rel.coords[i][r] for i in idx] for r in range(nrows)]
    out = []
    for v in nullspace(mat, zero, one, pivot_key=_rf_cost):
        full = [zero] * len(rel.embeddings)
        for i, c in zip(idx, v):
            full[i] = c
        out.append(full)
    return out


def _relation_xpolys(rel: _ModelRelations, vec, xring: PolyRing) -> list[Polynomial]:
    out = []
    for j in range(rel.model.degree):
        F = xring.zero()
        for c, emb in zip(vec, rel.embeddings):
            if c:
                F = F + lift_to_X(emb.images[j], xring) * c
        if F:
            out.append(F.monic())
    return out


def build_orbit_ideal(dec: GradedDecomposition, witness: RegularWitness, d: int, xring: PolyRing | None = None,
                      cache: dict | None = None):
    """Relations phi_s(v_j)(X) - sum a_l psi_l(v_j)(X) for all embeddings of degree <= d.

    Returns (generators, records).
    """
    if d < witness.max_degree:
        raise OrbitIdealError(f"candidate degree {d} is below the witness degree {witness.max_degree}")
    xring = xring or xpoly_ring(dec.group.ring)
    cache = {} if cache is None else cache
    gens: list[OrbitIdealGenerator] = []
    records: list[MatrixEquationRecord] = []
    for m in dec.models:
        rel = _model_relations(dec, m, witness, d, cache)
        records.extend(rel.records)
        nwit = len(witness.embeddings[m.label])
        for vec in _relations_up_to(rel, d):
            src = next(i for i in range(len(vec) - 1, -1, -1) if vec[i])
            emb = rel.embeddings[src]
            for j, F in enumerate(_relation_xpolys(rel, vec, xring)):
                gens.append(OrbitIdealGenerator(F, m.label, str(emb.images[0]) if src >= nwit else "witness",
                                                j, emb.degree))
    return gens, records


def generators_up_to(dec: GradedDecomposition, witness: RegularWitness, e: int, xring: PolyRing,
                     cache: dict) -> list[Polynomial]:
    """Generators of the K-space of ideal elements with X-degree <= e."""
    out = []
    top = max(e, witness.max_degree)
    for m in dec.models:
        rel = _model_relations(dec, m, witness, top, cache)
        for vec in _relations_up_to(rel, e):
            out.extend(_relation_xpolys(rel, vec, xring))
    return out


# -- certification --------------------------------------------------------------


@dataclass
class OrbitIdealReport:
    D_I: int
    generators: list[OrbitIdealGenerator]
    groebner_basis: list[Polynomial]
    standard_monomials: list
    term_order: str
    records: list[MatrixEquationRecord] = field(default_factory=list)
    candidate_degree: int = 0
    counts: dict[int, object] = field(default_factory=dict)

    @property
    def standard_monomial_count(self) -> int:
        return len(self.standard_monomials)

    def leading_monomials(self):
        order = as_order(self.term_order)
        return [g.leading_monomial(order) for g in self.groebner_basis]


def quotient_dimension(polys: list[Polynomial], order) -> int | str:
    gb = buchberger(polys, order)
    sm = standard_monomials(gb, order)
    return INFINITE if sm == INFINITE else len(sm)


def certify_DI(dec: GradedDecomposition, witness: RegularWitness, D_span: int, order=None,
               max_extra: int = 2) -> OrbitIdealReport:
    """Build the orbit ideal at D_span + 1, confirm its quotient has dimension |G|,
    then search downward for the least degree whose relations still generate."""
    G = dec.group
    order = as_order(order) if order is not None else G.ring.order
    xring = xpoly_ring(G.ring, order)
    cache: dict = {}
    d = D_span + 1
    while True:
        gens, records = build_orbit_ideal(dec, witness, d, xring, cache)
        polys = [g.xpoly for g in gens]
        gb = buchberger(polys, order)
        sm = standard_monomials(gb, order)
        if sm != INFINITE and len(sm) == G.order:
            break
        if d >= D_span + 1 + max_extra:
            got = sm if sm == INFINITE else len(sm)
            raise OrbitIdealError(f"relations through degree {d} give quotient dimension {got}, expected {G.order}")
        d += 1
    counts: dict[int, object] = {d: G.order}
    D_I = d
    for e in range(d - 1, -1, -1):
        sub = generators_up_to(dec, witness, e, xring, cache)
        if not sub:
            counts[e] = INFINITE
            break
        c = quotient_dimension(sub, order)
        counts[e] = c
        if c != G.order:
            break
        D_I = e
    return OrbitIdealReport(D_I, gens, gb, sm, str(order), records, d, dict(sorted(counts.items())))


def generator_in_kernel(gen: OrbitIdealGenerator) -> bool:
    return not xi(gen.xpoly)


def coefficients_invariant(group, gen: OrbitIdealGenerator) -> bool:
    gi = group.generator_indices()
    return all(group.act(g, c) == c for c in gen.coefficients() for g in gi)
