import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import decomposition
from invfield import ElementCapExceeded, GroupError, MatrixGroup, hom_basis, isotypic_table, multiplicity
from invfield.grouprep import IrreducibleModel, dual_model, validate_irreducibles
from invfield.multipoly import Polynomial
from invfield.scalars import CyclotomicElement, zeta

ORDERS = {"trivial": 1, "c2": 2, "c3_1d": 3, "c3": 3, "c3reg": 3, "c4reg": 4, "c5": 5, "s3std": 6,
          "c7": 7, "q8": 8, "c9": 9, "a4perm": 12}
SMALL = ["c2", "c3_1d", "c3", "c3reg", "c4reg", "s3std", "q8", "a4perm"]


@pytest.mark.parametrize("name,order", ORDERS.items())
def test_fixture_group_orders(name, order):
    G = decomposition(name).group
    assert G.order == order
    table = G.multiplication_table()
    # a Latin square with identity at index 0
    for i in range(order):
        assert sorted(table[i]) == list(range(order))
        assert table[0][i] == i == table[i][0]
        assert table[i][G.inverse(i)] == 0


def test_quaternion_structure():
    G = decomposition("q8").group
    assert not G.is_abelian()
    i, j = G.generator_indices()
    k = G.mul(i, j)
    assert G.power(i, 2) == G.power(j, 2) == G.power(k, 2)
    assert G.power(i, 4) == 0


def test_element_cap():
    with pytest.raises(ElementCapExceeded):
        MatrixGroup([[[0, -1], [1, 0]], [[-zeta(4), 0], [0, zeta(4)]]], cyclotomic_order=4, element_cap=5)


def test_singular_generator_rejected():
    with pytest.raises(GroupError):
        MatrixGroup([[[1, 1], [1, 1]]])


def test_invalid_models_are_reported():
    G = decomposition("c3_1d").group
    bad = IrreducibleModel("bad", G, [[[zeta(3, 2)]]])
    good = [IrreducibleModel(str(k), G, [[[zeta(3, k)]]]) for k in range(3)]
    assert validate_irreducibles(good, G).ok
    report = validate_irreducibles(good[:2] + [IrreducibleModel("dup", G, [[[zeta(3)]]])], G)
    assert not report.ok and "isomorphic" in report.message
    assert not validate_irreducibles([bad], G).ok
    assert dual_model(good[1], good).label == "2"


def test_q8_decomposition_through_degree_four():
    dec = decomposition("q8")
    table = isotypic_table(dec.models, 4)
    mult = [[m for _, m, _ in row] for row in table]
    # labels 1, i, j, k, Sta
    assert mult == [[1, 0, 0, 0, 0], [0, 0, 0, 0, 1], [0, 1, 1, 1, 0], [0, 0, 0, 0, 2], [2, 1, 1, 1, 0]]


@pytest.mark.parametrize("name", SMALL)
def test_multiplicities_fill_each_degree(name):
    dec = decomposition(name)
    G = dec.group
    for d in range(4):
        assert sum(m.degree * multiplicity(m, d) for m in dec.models) == G.ring.dim_degree(d)


@pytest.mark.parametrize("name", SMALL)
def test_every_hom_basis_is_equivariant_and_injective(name):
    dec = decomposition(name)
    for m in dec.models:
        for d in range(4):
            embs = hom_basis(m, d)
            assert len(embs) == multiplicity(m, d)
            for e in embs:
                assert e.is_equivariant(m) and e.is_injective()


@st.composite
def fixture_poly(draw, names=tuple(SMALL)):
    name = draw(st.sampled_from(names))
    G = decomposition(name).group
    ring = G.ring
    terms = {}
    for _ in range(draw(st.integers(0, 3))):
        mono = tuple(draw(st.integers(0, 2)) for _ in range(ring.nvars))
        c = draw(st.integers(-3, 3))
        if c:
            terms[mono] = ring.field.convert(c)
    return G, Polynomial(ring, terms)


@given(fixture_poly())
def test_reynolds_is_an_invariant_projection(case):
    G, f = case
    r = G.reynolds(f)
    assert G.is_invariant(r)
    assert G.reynolds(r) == r
    for g in range(G.order):
        assert G.reynolds(G.act(g, f)) == r


@given(fixture_poly(), st.data())
def test_action_is_a_left_action(case, data):
    G, f = case
    a = data.draw(st.integers(0, G.order - 1))
    b = data.draw(st.integers(0, G.order - 1))
    assert G.act(a, G.act(b, f)) == G.act(G.mul(a, b), f)


@given(st.sampled_from(SMALL), st.integers(0, 3), st.data())
def test_hom_basis_equivariance_random(name, d, data):
    dec = decomposition(name)
    m = data.draw(st.sampled_from(dec.models))
    embs = dec.embeddings(m, d)
    if not embs:
        return
    e = embs[data.draw(st.integers(0, len(embs) - 1))]
    G = dec.group
    g = data.draw(st.integers(0, G.order - 1))
    M = m.matrix(g)
    for j, img in enumerate(e.images):
        rhs = img.ring.zero()
        for i, other in enumerate(e.images):
            rhs = rhs + other.scale(M[i][j])
        assert G.act(g, img) == rhs


def test_graded_character_matches_direct_trace():
    G = decomposition("s3std").group
    for g in range(G.order):
        for d in range(4):
            monos = G.ring.monomials_of_degree(d)
            tr = sum((G.act_monomial(g, a).coeff(a) for a in monos), CyclotomicElement.rational(0))
            assert G.graded_character(g, d) == tr
