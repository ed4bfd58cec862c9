"""Group description files: JSON documents naming the ground field, the
generating matrices, and the irreducible models with their bases."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .grouprep import GradedDecomposition, IrreducibleModel, MatrixGroup, validate_irreducibles
from .multipoly.orders import KINDS, TermOrder, as_order
from .scalars import ScalarParseError, parse_scalar


class SpecError(ValueError):
    pass


@dataclass
class IrreducibleSpec:
    label: str
    degree: int
    matrices: list[list[list[Any]]]


@dataclass
class GroupSpec:
    name: str
    cyclotomic_order: int
    variables: list[str]
    generator_names: list[str]
    generators: list[list[list[Any]]]
    irreducibles: list[IrreducibleSpec]
    options: dict = field(default_factory=dict)
    description: str = ""

    @property
    def dimension(self) -> int:
        return len(self.variables)

    def build(self, term_order=None, element_cap: int | None = None):
        """Enumerate the group and validate the models; returns (group, models)."""
        order = term_order or self.options.get("term_order", "grevlex")
        cap = element_cap or self.options.get("element_cap", 1000)
        group = MatrixGroup(self.generators, self.generator_names, cyclotomic_order=self.cyclotomic_order,
                            variables=self.variables, term_order=as_order(order), element_cap=cap)
        models = [IrreducibleModel(ir.label, group, ir.matrices) for ir in self.irreducibles]
        report = validate_irreducibles(models, group)
        if not report.ok:
            raise SpecError(f"{self.name}: {report.message}")
        return group, models

    def decomposition(self, term_order=None, element_cap: int | None = None) -> GradedDecomposition:
        group, models = self.build(term_order, element_cap)
        return GradedDecomposition(group, models)


def _matrix(raw, m: int, where: str, size: int | None = None):
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
        raise SpecError(f"{where}: expected a non-empty list of rows")
    n = len(raw)
    if any(len(r) != n for r in raw):
        raise SpecError(f"{where}: matrix is not square ({n} rows, row lengths {[len(r) for r in raw]})")
    if size is not None and n != size:
        raise SpecError(f"{where}: expected a {size}x{size} matrix, got {n}x{n}")
    out = []
    for i, row in enumerate(raw):
        vals = []
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, str)):
                raise SpecError(f"{where}[{i}][{j}]: entries must be integers or scalar literals")
            try:
                vals.append(parse_scalar(v, m))
            except ScalarParseError as exc:
                raise SpecError(f"{where}[{i}][{j}]: {exc}") from None
        out.append(vals)
    return out


def parse_spec_data(data: dict, name: str = "<spec>") -> GroupSpec:
    if not isinstance(data, dict):
        raise SpecError(f"{name}: top level must be an object")
    m = data.get("cyclotomic_order", 1)
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise SpecError(f"{name}: cyclotomic_order must be a positive integer")
    variables = data.get("variables")
    gens_raw = data.get("generators")
    if not isinstance(gens_raw, list) or not gens_raw:
        raise SpecError(f"{name}: 'generators' must be a non-empty list")
    gen_names, gens = [], []
    for k, g in enumerate(gens_raw):
        if isinstance(g, dict):
            gname = g.get("name", f"g{k + 1}")
            raw = g.get("matrix")
        else:
            gname, raw = f"g{k + 1}", g
        gens.append(_matrix(raw, m, f"{name}: generator {gname!r}"))
        gen_names.append(str(gname))
    if len(set(gen_names)) != len(gen_names):
        raise SpecError(f"{name}: duplicate generator names")
    n = len(gens[0])
    for gname, g in zip(gen_names, gens):
        if len(g) != n:
            raise SpecError(f"{name}: generator {gname!r} has dimension {len(g)}, expected {n}")
    if variables is None:
        from .grouprep import _default_names

        variables = _default_names(n)
    if (not isinstance(variables, list) or len(variables) != n
            or not all(isinstance(v, str) and v.isidentifier() for v in variables)):
        raise SpecError(f"{name}: 'variables' must list {n} identifiers")
    if len(set(variables)) != n or "z" in variables:
        raise SpecError(f"{name}: variable names must be distinct and may not be 'z'")
    irr_raw = data.get("irreducibles")
    if not isinstance(irr_raw, list) or not irr_raw:
        raise SpecError(f"{name}: 'irreducibles' must be a non-empty list")
    irreducibles = []
    for k, ir in enumerate(irr_raw):
        if not isinstance(ir, dict) or "label" not in ir:
            raise SpecError(f"{name}: irreducible #{k} needs a label")
        label = str(ir["label"])
        mats = ir.get("matrices")
        if isinstance(mats, dict):
            missing = [g for g in gen_names if g not in mats]
            if missing:
                raise SpecError(f"{name}: irreducible {label!r} lacks matrices for {missing}")
            mats = [mats[g] for g in gen_names]
        if not isinstance(mats, list) or len(mats) != len(gens):
            raise SpecError(f"{name}: irreducible {label!r} needs one matrix per generator")
        deg = ir.get("degree")
        parsed = [_matrix(mt, m, f"{name}: irreducible {label!r} matrix {gn!r}", deg)
                  for mt, gn in zip(mats, gen_names)]
        d = len(parsed[0])
        if any(len(p) != d for p in parsed):
            raise SpecError(f"{name}: irreducible {label!r} matrices have different sizes")
        irreducibles.append(IrreducibleSpec(label, d, parsed))
    labels = [ir.label for ir in irreducibles]
    if len(set(labels)) != len(labels):
        raise SpecError(f"{name}: duplicate irreducible labels")
    options = data.get("options", {}) or {}
    if not isinstance(options, dict):
        raise SpecError(f"{name}: 'options' must be an object")
    if "term_order" in options:
        try:
            TermOrder(options["term_order"])
        except ValueError as exc:
            raise SpecError(f"{name}: {exc}; expected one of {KINDS}") from None
    return GroupSpec(
        name=str(data.get("name", name)),
        cyclotomic_order=m,
        variables=list(variables),
        generator_names=gen_names,
        generators=gens,
        irreducibles=irreducibles,
        options=options,
        description=str(data.get("description", "")),
    )


def parse_spec_text(text: str, name: str = "<spec>") -> GroupSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{name}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_spec_data(data, name)


def parse_spec(path) -> GroupSpec:
    """Read a spec from a path, or from a bundled fixture when given a bare name."""
    p = Path(path)
    if not p.exists():
        bundled = fixture_path(str(path))
        if bundled is None:
            raise SpecError(f"no such file or bundled fixture: {path}")
        p = bundled
    return parse_spec_text(p.read_text(), p.stem)


def fixture_names() -> list[str]:
    root = resources.files("invfield") / "fixtures"
    return sorted(f.name[:-5] for f in root.iterdir() if f.name.endswith(".json"))


def fixture_path(name: str):
    stem = name[:-5] if name.endswith(".json") else name
    f = resources.files("invfield") / "fixtures" / f"{stem}.json"
    return Path(str(f)) if f.is_file() else None


def load_fixture(name: str) -> GroupSpec:
    p = fixture_path(name)
    if p is None:
        raise SpecError(f"unknown fixture {name!r}; available: {', '.join(fixture_names())}")
    return parse_spec_text(p.read_text(), p.stem)
