import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import FULL, decomposition, pipeline
from invfield.multipoly import INFINITE, buchberger, parse_polynomial, parse_rational_function
from invfield.orbitideal import (
    OrbitIdealError,
    build_orbit_ideal,
    coefficients_invariant,
    find_multipliers,
    generator_in_kernel,
)
from oracles import W3, oracle_ideal

# fixture: (D_I, counts by candidate degree)
EXPECTED_DI = {
    "trivial": (1, {0: INFINITE, 1: 1}),
    "c2": (2, {1: INFINITE, 2: 2}),
    "c3_1d": (3, {2: INFINITE, 3: 3}),
    "c3": (2, {1: INFINITE, 2: 3}),
    "c5": (3, {2: INFINITE, 3: 5}),
    "c7": (4, {3: INFINITE, 4: 7}),
    "c9": (5, {4: INFINITE, 5: 9}),
    "c3reg": (2, {1: INFINITE, 2: 3}),
    "s3std": (3, {2: INFINITE, 3: 6, 4: 6}),
    "q8": (4, {3: 9, 4: 8}),
}


@pytest.mark.parametrize("name", EXPECTED_DI)
def test_generic_orbit_degree(name):
    orbit = pipeline(name).orbit
    D_I, counts = EXPECTED_DI[name]
    assert orbit.D_I == D_I
    assert orbit.counts == counts
    assert orbit.standard_monomial_count == decomposition(name).group.order


def test_q8_under_graded_lex():
    orbit = pipeline("q8", "grlex").orbit
    assert orbit.D_I == 4
    assert sorted(orbit.leading_monomials()) == sorted([(0, 4), (1, 3), (3, 0), (2, 1)])
    assert orbit.standard_monomial_count == 8


def test_q8_matrix_equation_for_the_standard_copy():
    dec = decomposition("q8")
    orbit = pipeline("q8").orbit
    ring = dec.group.ring
    (rec,) = [r for r in orbit.records if r.label == "Sta"]
    assert [str(p) for p in rec.target.images] == ["x", "y"]
    # the witness lists the copy spanned by (x^2 y, -x y^2) before (y^3, -x^3)
    a2 = parse_rational_function("(x^4 + y^4)/(x*y*(x^4 - y^4))", ring)
    a1 = parse_rational_function("-2*x*y/(x^4 - y^4)", ring)
    assert rec.solution == [a2, a1]
    for j, target in enumerate(rec.target.images):
        psi = [e.images[j] for e in dec.embeddings(dec.model("Sta"), 3)]
        total = a2 * psi[0] + a1 * psi[1]
        assert total == parse_rational_function(str(target), ring)


def test_multipliers_make_the_matrix_nonsingular():
    dec = decomposition("q8")
    span = pipeline("q8").span
    hs = find_multipliers(dec, dec.model("Sta"), span.witness)
    assert len(hs) == 2


def test_candidate_degree_below_witness_is_rejected():
    dec = decomposition("q8")
    with pytest.raises(OrbitIdealError):
        build_orbit_ideal(dec, pipeline("q8").span.witness, 2)


def _all_generators():
    out = []
    for name in FULL:
        res = pipeline(name)
        out.extend((name, g) for g in res.orbit.generators)
    return out


def test_every_generator_lies_in_the_kernel_with_invariant_coefficients():
    for name, g in _all_generators():
        assert generator_in_kernel(g), (name, g.xpoly)
        assert coefficients_invariant(decomposition(name).group, g), (name, g.xpoly)


@given(st.data())
def test_generator_properties_random(data):
    name, g = data.draw(st.sampled_from(_all_generators()))
    G = decomposition(name).group
    assert generator_in_kernel(g)
    k = data.draw(st.integers(0, G.order - 1))
    for c in g.coefficients():
        assert G.act(k, c) == c


@pytest.mark.parametrize("name,elements,ext,m", [
    ("trivial", [[[1]]], None, 1),
    ("c2", [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], None, 1),
    ("c3_1d", [[[1]], [[W3]], [[W3 ** 2]]], W3, 3),
])
def test_oracle_equivalence(name, elements, ext, m):
    res = pipeline(name)
    D = res.span.D_span + 1
    ring = decomposition(name).group.ring
    ref = buchberger(oracle_ideal(ring, elements, D, ext, m))
    assert sorted(map(str, ref)) == sorted(map(str, res.orbit.groebner_basis))


def test_parse_round_trip_of_generators():
    res = pipeline("c2")
    xring = res.orbit.groebner_basis[0].ring
    for p in res.orbit.groebner_basis:
        assert parse_polynomial(str(p), xring) == p
