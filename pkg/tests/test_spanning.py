import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import decomposition
from invfield import analyze_spanning, compute_Dreg, compute_Dspan, galois_rank, select_Vreg
from invfield.spanning import certify_full_rank, verify_witness

# fixture: (D_reg, D_span, profile)
EXPECTED = {
    "trivial": (0, 0, [1]),
    "c2": (1, 1, [1, 2]),
    "c3_1d": (2, 2, [1, 2, 3]),
    "c3": (1, 1, [1, 3]),
    "c3reg": (1, 1, [1, 3]),
    "c4reg": (1, 1, [1, 4]),
    "c5": (2, 2, [1, 3, 5]),
    "c7": (3, 3, [1, 3, 5, 7]),
    "c9": (4, 4, [1, 3, 5, 7, 9]),
    "s3std": (3, 3, [1, 3, 5, 6]),
    "q8": (3, 3, [1, 3, 6, 8]),
    "a4perm": (2, 3, [1, 4, 9, 12]),
}


@pytest.mark.parametrize("name", EXPECTED)
def test_degrees_and_profile(name):
    dec = decomposition(name)
    rep = analyze_spanning(dec.group, dec.models, dec=dec)
    D_reg, D_span, profile = EXPECTED[name]
    assert (rep.D_reg, rep.D_span) == (D_reg, D_span)
    assert rep.profile == profile
    assert rep.profile_strictly_increasing()
    assert rep.witness.dimension() == dec.group.order
    assert rep.witness.max_degree <= rep.D_span
    assert verify_witness(dec.group, rep.witness)


@pytest.mark.parametrize("name", ["q8", "a4perm", "c7", "s3std"])
def test_fast_rank_agrees_with_exact(name):
    dec = decomposition(name)
    assert compute_Dspan(dec, fast=True)[0] == compute_Dspan(dec)[0]


def test_a4_degree_one_dependence():
    dec = decomposition("a4perm")
    G = dec.group
    W = next(m for m in dec.models if m.degree == 3)
    (e,) = dec.embeddings(W, 1)
    (inv,) = dec.embeddings(next(m for m in dec.models if m.label == "1"), 1)
    t = inv.images[0]
    both = e.images + [p * t for p in e.images]
    assert galois_rank(G, both) == 3
    assert galois_rank(G, both, fast=True) == 3
    assert not certify_full_rank(G, both)
    assert compute_Dreg(dec) == 2


def test_q8_witness_degrees():
    dec = decomposition("q8")
    rep = analyze_spanning(dec.group, dec.models, dec=dec)
    assert rep.witness.degrees == {"1": [0], "i": [2], "j": [2], "k": [2], "Sta": [3, 3]}


def test_rank_of_invariants_is_one():
    dec = decomposition("c4reg")
    G = dec.group
    x1, x2, x3, x4 = G.ring.gens()
    e1 = x1 + x2 + x3 + x4
    assert galois_rank(G, [e1, e1 * e1, G.ring.one()]) == 1


def test_select_vreg_respects_degree_cap():
    dec = decomposition("a4perm")
    w = select_Vreg(dec, 3)
    assert all(d <= 3 for ds in w.degrees.values() for d in ds)
    assert verify_witness(dec.group, w)


@given(st.sampled_from(["c3", "c5", "q8", "s3std", "c4reg"]), st.data())
def test_orbit_sums_have_rank_one(name, data):
    # a polynomial times invariants never adds rank
    dec = decomposition(name)
    G = dec.group
    monos = G.ring.monomials_of_degree(data.draw(st.integers(1, 3)))
    f = G.ring.monomial(data.draw(st.sampled_from(monos)))
    r = G.reynolds(G.ring.monomial(data.draw(st.sampled_from(monos))))
    polys = [f, f * r] if r else [f]
    assert galois_rank(G, polys) == 1
