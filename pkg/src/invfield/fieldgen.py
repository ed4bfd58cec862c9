"""Generators of the invariant field: Reynolds bases of low-degree invariants,
an exact test for generating k(V)^G, extraction from orbit-ideal solves, and
the full bound check beta_field <= 2 D_span + 1."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .grouprep import GradedDecomposition, MatrixGroup
from .linalg import rref
from .multipoly import (
    INFINITE,
    Polynomial,
    RationalFunction,
    as_order,
    buchberger,
    lift_to_X,
    standard_monomials,
    xpoly_ring,
)
from .orbitideal import OrbitIdealReport, certify_DI
from .spanning import SpanReport, analyze_spanning, verify_witness


class FieldGenerationError(RuntimeError):
    pass


class NonInvariantCandidate(FieldGenerationError, ValueError):
    pass


def invariant_basis(group: MatrixGroup, d: int) -> list[Polynomial]:
    """A k-basis of the invariants of degree <= d, degree by degree.

    Each degree is spanned by Reynolds images of its monomials; the rows are
    reduced so every basis element has leading coefficient one.
    """
    out = []
    for e in range(d + 1):
        monos = group.ring.monomials_of_degree(e)
        rows = []
        for a in monos:
            r = group.reynolds(group.ring.monomial(a))
            if r:
                rows.append([r.coeff(m) for m in monos])
        if not rows:
            continue
        red, pivots = rref(rows)
        for k in range(len(pivots)):
            terms = {m: c for m, c in zip(monos, red[k]) if c}
            out.append(Polynomial._new(group.ring, terms))
    return out


@dataclass
class FieldGenerationResult:
    generates: bool
    count: int | str
    group_order: int
    reason: str
    groebner_basis: list = field(default_factory=list)

    def __bool__(self):
        return self.generates


def _split(c):
    if isinstance(c, RationalFunction):
        return c.num, c.den
    return c, c.ring.one()


def separating_relations(group: MatrixGroup, candidates, order=None) -> list[Polynomial]:
    """c_num(X) c_den(x) - c_num(x) c_den(X) for every non-constant candidate."""
    order = as_order(order) if order is not None else group.ring.order
    xring = xpoly_ring(group.ring, order)
    base = group.ring
    rels = []
    for c in candidates:
        num, den = _split(c)
        if num.ring != base:
            num, den = num.change_ring(base), den.change_ring(base)
        F = (lift_to_X(num, xring) * RationalFunction._raw(den, base.one())
             - lift_to_X(den, xring) * RationalFunction._raw(num, base.one()))
        if F:
            rels.append(F)
    return rels


def verify_field_generation(group: MatrixGroup, candidates, order=None,
                            check_invariance: bool = True) -> FieldGenerationResult:
    """Whether the candidates generate k(V)^G over k.

    The relations c(X) = c(x) cut out a finite fiber over the generic point
    exactly when the candidates have full transcendence degree, and the fiber
    is the generic orbit (|G| points) exactly when they generate the field.
    """
    candidates = list(candidates)
    if check_invariance:
        for c in candidates:
            if not group.is_invariant(c):
                raise NonInvariantCandidate(f"candidate {c} is not invariant")
    order = as_order(order) if order is not None else group.ring.order
    if group.n == 0:
        return FieldGenerationResult(True, 1, group.order, "no variables")
    special = _special_fiber_certificate(group, candidates, order)
    if special is not None:
        return special
    sub = _generating_subset(group, candidates, order)
    if sub is not None and len(sub) < len(candidates):
        res = _generic_count(group, sub, order)
        if res.generates:
            return res
    return _generic_count(group, candidates, order)


def _generic_count(group: MatrixGroup, candidates, order) -> FieldGenerationResult:
    rels = _dehomogenized_relations(group, candidates, order)
    if rels is None:
        rels = separating_relations(group, candidates, order)
    if not rels:
        return FieldGenerationResult(False, INFINITE, group.order, "transcendence degree deficit")
    gb = buchberger(rels, order)
    sm = standard_monomials(gb, order)
    if sm == INFINITE:
        return FieldGenerationResult(False, INFINITE, group.order, "transcendence degree deficit", gb)
    count = len(sm)
    if count == group.order:
        return FieldGenerationResult(True, count, group.order, "generic fiber is one orbit", gb)
    return FieldGenerationResult(False, count, group.order,
                                 f"generic fiber has {count} points, expected {group.order}", gb)


def _is_homogeneous(p: Polynomial) -> bool:
    return len({sum(m) for m in p.terms}) <= 1


def _dehomogenized_relations(group: MatrixGroup, candidates, order):
    """Separating relations at the point (x_1, ..., x_{n-1}, 1), or None.

    For homogeneous candidates, scaling X by x_n carries the fiber over this
    point onto the fiber over x, so both have the same length.  The base
    field loses one variable, which keeps coefficients much smaller.
    """
    base = group.ring
    parts = []
    for c in candidates:
        num, den = _split(c)
        if num.ring != base:
            num, den = num.change_ring(base), den.change_ring(base)
        if not (_is_homogeneous(num) and _is_homogeneous(den)):
            return None
        parts.append((num, den))
    xring = xpoly_ring(base, order)
    point = base.gens()[:-1] + [base.one()]
    rels = []
    for num, den in parts:
        F = (lift_to_X(num, xring) * RationalFunction._raw(den.substitute(point), base.one())
             - lift_to_X(den, xring) * RationalFunction._raw(num.substitute(point), base.one()))
        if F:
            rels.append(F)
    return rels


def _special_count(ring, polys, point, order):
    rels = [c.change_ring(ring) - ring.const(c.evaluate(point)) for c in polys]
    sm = standard_monomials(buchberger(rels, order), order)
    return INFINITE if sm == INFINITE else len(sm)


def _generating_subset(group: MatrixGroup, candidates, order, seed: int = 1):
    """A small subset whose fiber over a random integer point has |G| points.

    This is only a guess at a generating subset; the caller proves it.
    """
    if any(not isinstance(c, Polynomial) for c in candidates):
        return None
    polys = [c for c in candidates if not c.is_constant()]
    ring = group.ring.with_order(order)
    rng = random.Random(seed)
    point = [rng.randint(-50, 50) for _ in range(group.n)]
    chosen = []
    for c in polys:
        chosen.append(c)
        if _special_count(ring, chosen, point, order) == group.order:
            break
    else:
        return None
    for c in list(reversed(chosen[:-1])):
        trial = [q for q in chosen if q is not c]
        if _special_count(ring, trial, point, order) == group.order:
            chosen = trial
    return chosen


def _top_form(f: Polynomial) -> Polynomial:
    return f.homogeneous_part(int(f.degree()))


def _special_fiber_certificate(group: MatrixGroup, candidates, order, seed: int = 0):
    """A cheap proof of generation, or None when it does not apply.

    When the top-degree forms of polynomial candidates have only the trivial
    common zero, X -> c(X) is a finite map and the length of its fibers is
    upper semicontinuous on the image.  The generic fiber contains the orbit
    of a generic point, so it has length at least |G|; a special fiber of
    length |G| therefore pins the generic one to exactly |G|.
    """
    if any(not isinstance(c, Polynomial) for c in candidates):
        return None
    polys = [c for c in candidates if not c.is_constant()]
    if not polys:
        return None
    tops = [_top_form(c) for c in polys]
    gb = buchberger(tops, order)
    if standard_monomials(gb, order) == INFINITE:
        return None
    ring = group.ring.with_order(order)
    rng = random.Random(seed)
    point = [rng.randint(-50, 50) for _ in range(group.n)]
    rels = [c.change_ring(ring) - ring.const(c.evaluate(point)) for c in polys]
    gb = buchberger(rels, order)
    sm = standard_monomials(gb, order)
    if sm != INFINITE and len(sm) == group.order:
        return FieldGenerationResult(True, group.order, group.order,
                                     "finite map with a special fiber of length |G|", [])
    return None


# -- extraction -----------------------------------------------------------------


@dataclass
class FieldGenerator:
    poly: Polynomial
    degree: int
    provenance: str


@dataclass
class GeneratorSet:
    generators: list[FieldGenerator]

    def polys(self) -> list[Polynomial]:
        return [g.poly for g in self.generators]

    def degrees(self) -> list[int]:
        return [g.degree for g in self.generators]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def __len__(self):
        return len(self.generators)


def extract_field_generators(report: OrbitIdealReport, D_span: int,
                             group: MatrixGroup | None = None) -> GeneratorSet:
    """Invariant polynomials appearing in the matrix equations behind the
    relations of degree <= max(D_I, D_span), up to scalars, without repeats.

    With ``group`` given, the set is checked to generate the invariant field.
    """
    top = max(report.D_I, D_span)
    seen = set()
    gens = []
    for rec in report.records:
        if rec.target.degree > top:
            continue
        where = f"{rec.label}: {rec.target.images[0]}"
        for p in rec.invariants():
            q = p.monic()
            if q in seen:
                continue
            seen.add(q)
            gens.append(FieldGenerator(q, int(q.degree()), where))
    gens.sort(key=lambda g: (g.degree, str(g.poly)))
    out = GeneratorSet(gens)
    if group is not None:
        res = verify_field_generation(group, out.polys(), report.term_order)
        if not res:
            raise FieldGenerationError(f"extracted invariants do not generate the invariant field: {res.reason}")
    return out


def compute_beta_field_upper(group: MatrixGroup, limit: int | None = None, order=None) -> int | None:
    """Least d <= limit whose invariants of degree <= d generate k(V)^G, else None.

    The default limit |G| always suffices.
    """
    limit = group.order if limit is None else limit
    last = None
    for d in range(1, limit + 1):
        basis = invariant_basis(group, d)
        if last is not None and len(basis) == last:
            continue
        last = len(basis)
        if verify_field_generation(group, basis, order, check_invariance=False):
            return d
    return None


# -- the full check ---------------------------------------------------------------


@dataclass
class BoundReport:
    group_order: int
    D_reg: int
    D_span: int
    D_I: int | None
    beta_field_upper: int | None
    main_bound: int
    extracted_count: int | None
    extracted_max_degree: int | None
    checks: dict[str, bool | None]
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is False]


@dataclass
class PipelineResult:
    bound: BoundReport
    span: SpanReport
    orbit: OrbitIdealReport | None
    generators: GeneratorSet | None


def run_pipeline(dec: GradedDecomposition, order=None, fast: bool = False,
                 orbit_ideal: bool = True, beta_limit: int | None = None) -> PipelineResult:
    """D_reg, D_span, witness, orbit ideal and D_I, extraction, and the beta_field search."""
    G = dec.group
    timings = {}
    t = time.perf_counter()
    span = analyze_spanning(G, dec.models, fast, dec)
    witness_ok = verify_witness(G, span.witness)
    timings["spanning"] = time.perf_counter() - t

    orbit = gens = None
    gens_ok = None
    if orbit_ideal:
        t = time.perf_counter()
        orbit = certify_DI(dec, span.witness, span.D_span, order)
        timings["orbit_ideal"] = time.perf_counter() - t
        t = time.perf_counter()
        gens = extract_field_generators(orbit, span.D_span)
        gens_ok = bool(verify_field_generation(G, gens.polys(), order, check_invariance=True))
        timings["extraction"] = time.perf_counter() - t

    t = time.perf_counter()
    beta = compute_beta_field_upper(G, beta_limit, order)
    timings["beta_field"] = time.perf_counter() - t

    bound = 2 * span.D_span + 1
    D_I = orbit.D_I if orbit else None
    checks = {
        "D_reg <= D_span": span.D_reg <= span.D_span,
        "D_span <= |G| - 1": span.D_span <= G.order - 1,
        "D_I <= D_span + 1": None if D_I is None else D_I <= span.D_span + 1,
        "beta_field <= 2 D_span + 1": beta is not None and beta <= bound,
        "witness spans k(V) over K": witness_ok,
        "profile strictly increasing": span.profile_strictly_increasing(),
        "extracted invariants generate K": gens_ok,
        "extracted degrees <= 2 D_span + 1": None if gens is None else gens.max_degree <= bound,
    }
    report = BoundReport(G.order, span.D_reg, span.D_span, D_I, beta, bound,
                         None if gens is None else len(gens),
                         None if gens is None else gens.max_degree, checks, timings)
    return PipelineResult(report, span, orbit, gens)


def verify_main_theorem(dec: GradedDecomposition, order=None, fast: bool = False,
                        orbit_ideal: bool = True) -> BoundReport:
    return run_pipeline(dec, order, fast, orbit_ideal).bound
