import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import FULL, decomposition, pipeline
from invfield import compute_beta_field_upper, extract_field_generators, invariant_basis, verify_field_generation
from invfield.fieldgen import NonInvariantCandidate
from invfield.multipoly import INFINITE, RationalFunction, parse_polynomial

BETA = {"trivial": 1, "c2": 2, "c3_1d": 3, "c3": 3, "c3reg": 3, "c4reg": 3, "c5": 5, "c7": 7, "c9": 9,
        "s3std": 3, "q8": 6, "a4perm": 6}


def q8_polys(*texts):
    ring = decomposition("q8").group.ring
    return [parse_polynomial(t, ring) for t in texts]


def test_q8_invariant_bases():
    G = decomposition("q8").group
    b4 = invariant_basis(G, 4)
    assert sorted(map(str, b4)) == ["1", "x^2*y^2", "x^4 + y^4"]
    b6 = invariant_basis(G, 6)
    assert len(b6) == 4 and "x^5*y - x*y^5" in map(str, b6)
    assert all(G.is_invariant(p) for p in b6)


def test_q8_degree_four_invariants_leave_a_double_cover():
    G = decomposition("q8").group
    res = verify_field_generation(G, q8_polys("x^4 + y^4", "x^2*y^2"))
    assert not res and res.count == 16
    res = verify_field_generation(G, q8_polys("x^4 + y^4", "x^2*y^2", "x^5*y - x*y^5"))
    assert res and res.count == 8


def test_trivial_group():
    G = decomposition("trivial").group
    assert verify_field_generation(G, [G.ring.gens()[0]])
    assert not verify_field_generation(G, [])


def test_transcendence_deficit():
    G = decomposition("c2").group
    x, y = G.ring.gens()
    res = verify_field_generation(G, [x + y])
    assert not res and res.count == INFINITE
    assert res.reason == "transcendence degree deficit"


def test_rational_function_candidates():
    G = decomposition("c2").group
    x, y = G.ring.gens()
    s, p = x + y, x * y
    assert verify_field_generation(G, [s, RationalFunction(p, s)])
    # not homogeneous, so the dehomogenized shortcut does not apply
    one = G.ring.one()
    assert verify_field_generation(G, [s + one, RationalFunction(p, s + one)])
    assert not verify_field_generation(G, [RationalFunction(p, s * s)])


def test_non_invariant_candidate_is_rejected():
    G = decomposition("q8").group
    with pytest.raises(NonInvariantCandidate):
        verify_field_generation(G, q8_polys("x^4", "x^2*y^2"))


def test_c4_regular_degree_two_is_not_enough():
    G = decomposition("c4reg").group
    res = verify_field_generation(G, invariant_basis(G, 2))
    assert not res and res.count == INFINITE


@pytest.mark.parametrize("name", [n for n in BETA if n not in ("c4reg", "a4perm")])
def test_beta_field(name):
    G = decomposition(name).group
    beta = compute_beta_field_upper(G)
    assert beta == BETA[name]
    assert verify_field_generation(G, invariant_basis(G, beta), check_invariance=False)
    if beta > 1:
        assert not verify_field_generation(G, invariant_basis(G, beta - 1), check_invariance=False)


def test_beta_field_a4():
    G = decomposition("a4perm").group
    assert compute_beta_field_upper(G) == 6


def test_beta_search_honours_limit():
    G = decomposition("c7").group
    assert compute_beta_field_upper(G, limit=6) is None


def test_q8_extracted_generators():
    res = pipeline("q8")
    gens = res.generators
    assert [str(p) for p in gens.polys()] == [
        "x^2*y^2", "x^4 + 2*x^2*y^2 + y^4", "x^4 + y^4", "x^4 - 2*x^2*y^2 + y^4", "x^5*y - x*y^5"]
    assert gens.degrees() == [4, 4, 4, 4, 6]
    assert gens.max_degree <= 2 * res.span.D_span + 1
    assert verify_field_generation(decomposition("q8").group, gens.polys())
    again = extract_field_generators(res.orbit, res.span.D_span, decomposition("q8").group)
    assert again.polys() == gens.polys()


@pytest.mark.parametrize("name", FULL)
def test_bound_report(name):
    bound = pipeline(name).bound
    assert bound.passed, bound.failures()
    assert bound.beta_field_upper == BETA[name]
    assert bound.beta_field_upper <= bound.main_bound == 2 * bound.D_span + 1
    assert bound.extracted_max_degree <= bound.main_bound


@given(st.sampled_from(["c3", "c5", "q8", "s3std", "c3reg"]), st.data())
def test_adding_invariants_keeps_generation(name, data):
    G = decomposition(name).group
    beta = BETA[name]
    basis = invariant_basis(G, beta)
    extra = data.draw(st.sampled_from(invariant_basis(G, beta + 1)))
    scale = data.draw(st.integers(1, 5)) * data.draw(st.sampled_from([1, -1]))
    cands = [p.scale(G.ring.field.convert(scale)) for p in basis] + [extra]
    order = data.draw(st.sampled_from(["grevlex", "lex"]))
    assert verify_field_generation(G, cands, order, check_invariance=False)


@given(st.sampled_from(["c3", "c5", "q8", "c3reg"]), st.data())
def test_scaling_does_not_change_a_failure(name, data):
    G = decomposition(name).group
    basis = invariant_basis(G, BETA[name] - 1)
    scale = data.draw(st.integers(1, 7))
    cands = [p.scale(G.ring.field.convert(scale)) for p in basis]
    assert not verify_field_generation(G, cands, check_invariance=False)
