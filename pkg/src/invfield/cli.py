"""Command-line front end: read a group description, run part or all of the
pipeline, and print aligned tables or a JSON report."""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from .fieldgen import FieldGenerationError, compute_beta_field_upper, run_pipeline, verify_field_generation
from .grouprep import GradedDecomposition, GroupError
from .multipoly import (
    INFINITE,
    CyclotomicField,
    PolynomialParseError,
    PolyRing,
    as_order,
    buchberger,
    format_polynomial,
    parse_polynomial,
    standard_monomials,
)
from .multipoly.literal import format_monomial
from .orbitideal import OrbitIdealError, certify_DI
from .spanning import SpanningError, analyze_spanning, verify_witness
from .specfile import GroupSpec, SpecError, parse_spec

COMMANDS = ("dreg", "dspan", "decompose", "orbit-ideal", "generators", "verify", "gb")


@dataclass
class AnalysisReport:
    """Everything one command computed, as plain JSON-compatible values."""

    command: str
    spec: str
    group_order: int
    term_order: str
    results: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        return cls(**data)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for k, r in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _count(sm) -> int | str:
    return sm if sm == INFINITE else len(sm)


def _span_results(span, witness_ok) -> tuple[dict, dict]:
    res = {
        "D_reg": span.D_reg,
        "D_span": span.D_span,
        "profile": list(span.profile),
        "rank_profile": {k: list(v) for k, v in span.rank_profile.items()},
        "witness": {label: [{"degree": e.degree, "images": [str(p) for p in e.images]} for e in embs]
                    for label, embs in span.witness.embeddings.items()},
    }
    checks = {
        "D_reg <= D_span": span.D_reg <= span.D_span,
        "D_span <= |G| - 1": span.D_span <= span.group_order - 1,
        "profile strictly increasing": span.profile_strictly_increasing(),
        "witness spans k(V) over K": witness_ok,
    }
    return res, checks


def _orbit_results(orbit, order) -> dict:
    names = orbit.groebner_basis[0].ring.names if orbit.groebner_basis else ()
    return {
        "D_I": orbit.D_I,
        "candidate_degree": orbit.candidate_degree,
        "counts": {str(k): v for k, v in orbit.counts.items()},
        "standard_monomial_count": orbit.standard_monomial_count,
        "leading_monomials": [format_monomial(m, names) for m in orbit.leading_monomials()],
        "groebner_basis": [format_polynomial(p, order) for p in orbit.groebner_basis],
        "generators": [{"label": g.label, "source": g.source, "basis_index": g.basis_index,
                        "degree": g.degree, "poly": str(g.xpoly)} for g in orbit.generators],
        "matrix_equations": [{"label": r.label, "target": [str(p) for p in r.target.images],
                              "degree": r.target.degree,
                              "multipliers": [str(h) for h in r.multipliers],
                              "solution": [str(a) for a in r.solution]} for r in orbit.records],
    }


def _decompose(spec: GroupSpec, dec: GradedDecomposition, max_degree: int) -> dict:
    rows = []
    ring = dec.group.ring
    for d in range(max_degree + 1):
        mult = {m.label: dec.multiplicity(m, d) for m in dec.models}
        summands = [{"label": m.label, "span": [str(p) for p in e.images]}
                    for m in dec.models for e in dec.embeddings(m, d)]
        rows.append({"degree": d, "dimension": len(ring.monomials_of_degree(d)),
                     "multiplicities": mult, "summands": summands})
    return {"max_degree": max_degree, "labels": [m.label for m in dec.models], "table": rows}


def _want_orbit_ideal(spec: GroupSpec, args) -> bool:
    if args.skip_orbit_ideal:
        return False
    if args.orbit_ideal:
        return True
    return spec.options.get("orbit_ideal", True)


def run(command: str, spec: GroupSpec, args) -> AnalysisReport:
    order = as_order(args.term_order or spec.options.get("term_order", "grevlex"))
    t0 = time.perf_counter()
    dec = spec.decomposition(order, args.element_cap)
    G = dec.group
    report = AnalysisReport(command, spec.name, G.order, str(order))
    report.timings["group"] = time.perf_counter() - t0

    if command == "decompose":
        top = args.max_degree if args.max_degree is not None else spec.options.get("max_degree", G.order - 1)
        t = time.perf_counter()
        report.results = _decompose(spec, dec, top)
        report.timings["decompose"] = time.perf_counter() - t
        return report

    if command == "dreg":
        from .spanning import compute_Dreg

        report.results = {"D_reg": compute_Dreg(dec)}
        return report

    if command == "dspan":
        t = time.perf_counter()
        span = analyze_spanning(G, dec.models, args.fast_rank, dec)
        report.results, report.checks = _span_results(span, verify_witness(G, span.witness))
        report.timings["spanning"] = time.perf_counter() - t
        return report

    if command == "orbit-ideal":
        t = time.perf_counter()
        span = analyze_spanning(G, dec.models, args.fast_rank, dec)
        orbit = certify_DI(dec, span.witness, span.D_span, order)
        report.timings["orbit_ideal"] = time.perf_counter() - t
        report.results = {"D_span": span.D_span, **_orbit_results(orbit, order)}
        report.checks = {"D_I <= D_span + 1": orbit.D_I <= span.D_span + 1,
                         "quotient dimension = |G|": orbit.standard_monomial_count == G.order}
        return report

    if command == "generators":
        from .fieldgen import extract_field_generators

        t = time.perf_counter()
        span = analyze_spanning(G, dec.models, args.fast_rank, dec)
        orbit = certify_DI(dec, span.witness, span.D_span, order)
        gens = extract_field_generators(orbit, span.D_span)
        res = verify_field_generation(G, gens.polys(), order)
        report.timings["extraction"] = time.perf_counter() - t
        t = time.perf_counter()
        beta = compute_beta_field_upper(G, args.max_degree, order)
        report.timings["beta_field"] = time.perf_counter() - t
        bound = 2 * span.D_span + 1
        report.results = {
            "D_span": span.D_span, "D_I": orbit.D_I, "beta_field_upper": beta, "main_bound": bound,
            "generators": [{"degree": g.degree, "poly": str(g.poly), "provenance": g.provenance}
                           for g in gens.generators],
            "generic_fiber": res.count, "reason": res.reason,
        }
        report.checks = {
            "extracted invariants generate K": res.generates,
            "extracted degrees <= 2 D_span + 1": gens.max_degree <= bound,
            "beta_field <= 2 D_span + 1": beta is not None and beta <= bound,
        }
        return report

    if command == "verify":
        with_orbit = _want_orbit_ideal(spec, args)
        pipe = run_pipeline(dec, order, args.fast_rank, with_orbit, args.max_degree)
        b = pipe.bound
        span_res, _ = _span_results(pipe.span, b.checks["witness spans k(V) over K"])
        report.results = {
            "D_reg": b.D_reg, "D_span": b.D_span, "D_I": b.D_I,
            "beta_field_upper": b.beta_field_upper, "main_bound": b.main_bound,
            "extracted_count": b.extracted_count, "extracted_max_degree": b.extracted_max_degree,
            "orbit_ideal": "computed" if with_orbit else "skipped",
            "profile": span_res["profile"], "witness": span_res["witness"],
        }
        if pipe.orbit is not None:
            report.results["orbit"] = _orbit_results(pipe.orbit, order)
        if pipe.generators is not None:
            report.results["generators"] = [str(p) for p in pipe.generators.polys()]
        report.checks = dict(b.checks)
        report.timings.update(b.timings)
        return report

    raise ValueError(f"unknown command {command!r}")


def run_gb(args) -> AnalysisReport:
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    order = as_order(args.term_order or "grevlex")
    ring = PolyRing(tuple(names), CyclotomicField(args.cyclotomic_order), order)
    polys = [parse_polynomial(s, ring) for s in args.polys]
    t = time.perf_counter()
    gb = buchberger(polys, order)
    sm = standard_monomials(gb, order)
    report = AnalysisReport("gb", "<command line>", 0, str(order))
    report.timings["groebner"] = time.perf_counter() - t
    report.results = {
        "groebner_basis": [format_polynomial(p, order) for p in gb],
        "leading_monomials": [format_monomial(p.leading_monomial(order), names) for p in gb],
        "standard_monomial_count": _count(sm),
    }
    return report


# -- human-readable output ---------------------------------------------------------


def _fmt_checks(checks: dict) -> str:
    rows = [(k, "skipped" if v is None else ("pass" if v else "FAIL")) for k, v in checks.items()]
    return _table(["check", "result"], rows)


def render(report: AnalysisReport) -> str:
    r = report.results
    size = f"  |G| = {report.group_order}" if report.group_order else ""
    out = [f"{report.command}: {report.spec}{size}  order = {report.term_order}"]
    if report.command == "decompose":
        labels = r["labels"]
        rows = []
        for row in r["table"]:
            mult = [row["multiplicities"][lb] or "." for lb in labels]
            spans = "; ".join(f"{s['label']}: <{', '.join(s['span'])}>" for s in row["summands"])
            rows.append([row["degree"], row["dimension"], *mult, spans])
        out.append(_table(["deg", "dim", *labels, "summands"], rows))
    elif report.command == "gb":
        out.append(_table(["lm", "element"], zip(r["leading_monomials"], r["groebner_basis"])))
        out.append(f"standard monomials: {r['standard_monomial_count']}")
    elif report.command == "generators":
        out.append(_table(["deg", "generator"], [(g["degree"], g["poly"]) for g in r["generators"]]))
        out.append(f"generic fiber: {r['generic_fiber']} ({r['reason']})")
        out.append(f"beta_field <= {r['beta_field_upper']}, bound 2 D_span + 1 = {r['main_bound']}")
    else:
        scalars = [(k, v) for k, v in r.items() if not isinstance(v, (dict, list))]
        if scalars:
            out.append(_table(["quantity", "value"], [(k, "-" if v is None else v) for k, v in scalars]))
        if "profile" in r:
            out.append("profile: " + " ".join(map(str, r["profile"])))
        if "witness" in r:
            rows = [(label, e["degree"], ", ".join(e["images"]))
                    for label, embs in r["witness"].items() for e in embs]
            out.append(_table(["label", "deg", "basis images"], rows))
        orbit = r.get("orbit", r if "groebner_basis" in r else None)
        if orbit:
            out.append("counts by degree: " + ", ".join(f"{k}: {v}" for k, v in orbit["counts"].items()))
            out.append(_table(["lm", "Groebner basis element"],
                              zip(orbit["leading_monomials"], orbit["groebner_basis"])))
    if report.checks:
        out.append(_fmt_checks(report.checks))
    return "\n\n".join(out) + "\n"


# -- entry point ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="invfield", description="Degree bounds for rational invariants of finite groups.")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the machine-readable report")
    common.add_argument("--term-order", choices=["grevlex", "grlex", "lex"])
    common.add_argument("--element-cap", type=int, help="abort group enumeration beyond N elements")
    common.add_argument("--max-degree", type=int, help="degree cap for decompose and the beta_field search")
    common.add_argument("--fast-rank", action="store_true", help="try random evaluations before exact ranks")
    blurbs = {
        "dreg": "smallest degree holding a copy of every irreducible",
        "dspan": "smallest degree whose isotypic copies span k(V) over the invariants",
        "decompose": "graded isotypic decomposition of the polynomial ring",
        "orbit-ideal": "degree at which the orbit ideal has |G| standard monomials",
        "generators": "smallest degree whose invariants generate the invariant field",
        "verify": "run every stage and check the degree inequalities",
    }
    for name in COMMANDS[:-1]:
        sp = sub.add_parser(name, parents=[common], help=blurbs[name])
        sp.add_argument("spec", help="path to a group description, or a bundled fixture name")
        if name == "verify":
            g = sp.add_mutually_exclusive_group()
            g.add_argument("--skip-orbit-ideal", action="store_true", help="omit the orbit ideal stage")
            g.add_argument("--orbit-ideal", action="store_true", help="override a fixture's skip flag")
    gb = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of polynomials")
    gb.add_argument("polys", nargs="+")
    gb.add_argument("--vars", required=True, help="comma-separated variable names")
    gb.add_argument("--cyclotomic-order", type=int, default=1)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for flag in ("skip_orbit_ideal", "orbit_ideal"):
        if not hasattr(args, flag):
            setattr(args, flag, False)
    try:
        if args.command == "gb":
            report = run_gb(args)
        else:
            report = run(args.command, parse_spec(args.spec), args)
    except (SpecError, GroupError, PolynomialParseError) as exc:
        print(f"invfield: error: {exc}", file=sys.stderr)
        return 2
    except (SpanningError, OrbitIdealError, FieldGenerationError) as exc:
        print(f"invfield: {args.command} failed: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(report.to_json() + "\n" if args.json else render(report))
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
