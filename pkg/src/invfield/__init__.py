"""Exact invariant theory for finite matrix groups over cyclotomic fields:
spanning degrees, generic orbit ideals and generators of rational invariants."""
from .fieldgen import (
    BoundReport,
    FieldGenerationError,
    FieldGenerationResult,
    GeneratorSet,
    compute_beta_field_upper,
    extract_field_generators,
    invariant_basis,
    run_pipeline,
    verify_field_generation,
    verify_main_theorem,
)
from .grouprep import (
    ElementCapExceeded,
    EquivariantEmbedding,
    GradedDecomposition,
    GroupError,
    IrreducibleModel,
    MatrixGroup,
    hom_basis,
    isotypic_table,
    multiplicity,
)
from .orbitideal import OrbitIdealError, OrbitIdealReport, certify_DI
from .scalars import CyclotomicElement, ScalarParseError, parse_scalar, zeta
from .spanning import SpanReport, analyze_spanning, compute_Dreg, compute_Dspan, galois_rank, select_Vreg
from .specfile import GroupSpec, SpecError, fixture_names, load_fixture, parse_spec

__all__ = [
    "BoundReport",
    "CyclotomicElement",
    "ElementCapExceeded",
    "EquivariantEmbedding",
    "FieldGenerationError",
    "FieldGenerationResult",
    "GeneratorSet",
    "GradedDecomposition",
    "GroupError",
    "GroupSpec",
    "IrreducibleModel",
    "MatrixGroup",
    "OrbitIdealError",
    "OrbitIdealReport",
    "ScalarParseError",
    "SpanReport",
    "SpecError",
    "analyze_spanning",
    "certify_DI",
    "compute_Dreg",
    "compute_Dspan",
    "compute_beta_field_upper",
    "extract_field_generators",
    "fixture_names",
    "galois_rank",
    "hom_basis",
    "invariant_basis",
    "isotypic_table",
    "load_fixture",
    "multiplicity",
    "parse_scalar",
    "parse_spec",
    "run_pipeline",
    "select_Vreg",
    "verify_field_generation",
    "verify_main_theorem",
    "zeta",
]
