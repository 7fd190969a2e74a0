import pytest
from hypothesis import given, settings, strategies as st

from z2lab.certify import (
    Certificate,
    HypothesisError,
    UnrealizableError,
    amalgam_certificate,
    ceil_half,
    check_lemma_k33,
    copy_cycles,
    is_unit_lower_triangular,
    is_xy_wing,
    k3t_certificate,
    k3t_matrix,
    k3t_pigeonhole,
    orthogonality_check,
    ramsey_potential,
    wing_cycle_pairs,
)
from z2lab.corpus import load_drawing
from z2lab.crosscap import CrosscapDrawing, intersection_form, scheme_to_drawing
from z2lab.embedding import EmbeddingScheme, euler_genus_of_scheme
from z2lab.families import amalgam, complete_bipartite_3t, complete_graph, k33, kuratowski_wing
from z2lab.gf2 import BitVec, Gf2Matrix, is_tournament, rank, tournament_rank_floor
from z2lab.graph import Graph

from conftest import bitvecs
from oracles import cyclic_orders


def test_lemma_k33_examples():
    z = CrosscapDrawing.zero(complete_bipartite_3t(4), 2)
    assert not check_lemma_k33(z, 1, 2).passed
    d = load_drawing("k34-projective")
    assert check_lemma_k33(d, 1, 2).sum == 1
    for i, j in [(1, 2), (1, 3), (2, 3)]:
        assert check_lemma_k33(d, i, j).sum == check_lemma_k33(d, j, i).sum
    with pytest.raises(ValueError):
        check_lemma_k33(d, 1, 1)


def test_k3t_certificate_examples():
    c = k3t_certificate(load_drawing("k34-projective"))
    assert is_tournament(c.matrix) and c.rank >= 1 and c.eg_bound == 1
    c = k3t_certificate(load_drawing("k36-torus"))
    assert (c.eg_bound, c.g_bound) == (2, 1)
    with pytest.raises(UnrealizableError):
        k3t_certificate(CrosscapDrawing.zero(complete_bipartite_3t(4), 3))


def test_pigeonhole_examples():
    rep = k3t_pigeonhole(CrosscapDrawing.zero(complete_bipartite_3t(4), 0))
    assert rep.contradiction and rep.guaranteed
    assert not k3t_pigeonhole(load_drawing("k34-projective")).contradiction
    assert "contradicting" in rep.to_text()


@settings(max_examples=60)
@given(st.integers(0, 2), st.data())
def test_pigeonhole_fires_past_threshold(h, data):
    t = 2 * 4**h + 2 + data.draw(st.integers(0, 3))
    g = complete_bipartite_3t(t)
    y = data.draw(st.lists(bitvecs(h), min_size=g.m, max_size=g.m))
    rep = k3t_pigeonhole(CrosscapDrawing(g, h, tuple(y)))
    assert rep.guaranteed and rep.contradiction


def test_is_xy_wing_examples():
    assert is_xy_wing(k33(), 0, 1)
    h, x, y = kuratowski_wing("f")
    assert is_xy_wing(h, x, y)
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert not is_xy_wing(c4, 0, 2)
    assert not is_xy_wing(complete_graph(5), 0, 1)


def test_wing_pairs_on_witness():
    d = load_drawing("amalg-k33-2")
    am = amalgam(k33(), 0, 1, 2)
    for c in range(2):
        p = wing_cycle_pairs(d, am, c)
        assert intersection_form(d, p.c1, p.c2) == 1
        assert p.placement_ok


def test_wing_pairs_flag_zero_datum():
    am = amalgam(k33(), 0, 1, 2)
    with pytest.raises(UnrealizableError):
        wing_cycle_pairs(CrosscapDrawing.zero(am.graph, 3), am, 0)


@pytest.mark.parametrize("kind", "fgh")
@pytest.mark.parametrize("t", [2, 3])
def test_placements_hold_structurally(kind, t):
    h, x, y = kuratowski_wing(kind)
    am = amalgam(h, x, y, t)
    g = am.graph
    for c in range(t):
        cyc = copy_cycles(am, c)
        assert all(am.y not in v.vertices(g) for v in cyc["e"].values())
        assert all(am.x not in v.vertices(g) for v in cyc["f"].values())
        assert all(not {am.x, am.y} & v.vertices(g) for v in cyc["g"].values())


@pytest.mark.parametrize("kind", "fgh")
def test_cross_copy_families_are_disjoint(kind):
    h, x, y = kuratowski_wing(kind)
    am = amalgam(h, x, y, 3)
    g = am.graph
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            a, b = copy_cycles(am, i), copy_cycles(am, j)
            for left, right in [("e", "f"), ("f", "g"), ("e", "g"), ("g", "g")]:
                for c1 in a[left].values():
                    for c2 in b[right].values():
                        assert not c1.vertices(g) & c2.vertices(g)


def test_amalgam_certificates():
    for t in (2, 3):
        d = load_drawing(f"amalg-k33-{t}")
        c = amalgam_certificate(d, amalgam(k33(), 0, 1, t))
        assert is_unit_lower_triangular(c.matrix)
        assert (c.rank, c.eg_bound, c.g_bound) == (t, t, ceil_half(t))


def test_single_copy_certificate():
    d = load_drawing("k33-torus")
    c = amalgam_certificate(d, amalgam(k33(), 0, 1, 1))
    assert c.matrix == Gf2Matrix.identity(1) and c.eg_bound == 1


def test_amalgam_rejects_foreign_datum():
    with pytest.raises(Exception):
        amalgam_certificate(load_drawing("k33-torus"), amalgam(k33(), 0, 1, 2))


def test_unit_lower_triangular():
    assert is_unit_lower_triangular(Gf2Matrix.from_lists([[1, 0], [1, 1]]))
    assert not is_unit_lower_triangular(Gf2Matrix.from_lists([[1, 1], [0, 1]]))
    assert not is_unit_lower_triangular(Gf2Matrix.from_lists([[1, 0], [0, 0]]))


def test_certificate_coupling_is_enforced():
    with pytest.raises(ValueError):
        Certificate("g", "k3t-rank", Gf2Matrix.identity(3), 3, 3, 1)
    c = Certificate("g", "k3t-rank", Gf2Matrix.identity(3), 3, 3, 2)
    assert '"eg_bound": 3' in c.to_text()


def _identical_copies(am, h, rng_bits):
    y = [None] * am.graph.m
    for e in range(am.wing.graph.m):
        v = BitVec(h, rng_bits[e])
        for c in range(am.t):
            y[am.edge(c, e)] = v
    return CrosscapDrawing(am.graph, h, tuple(y))


@given(st.lists(st.integers(0, 7), min_size=9, max_size=9))
def test_orthogonality_substitution(bits):
    am = amalgam(k33(), 0, 1, 2)
    d = _identical_copies(am, 3, bits)
    rep = orthogonality_check(d, am, 0, 1)
    for rows in rep.families.values():
        for _, same, cross in rows:
            assert same == cross
    if rep.all_zero:
        assert rep.contradiction


def test_orthogonality_on_zero_datum_reproduces_contradiction():
    am = amalgam(k33(), 0, 1, 2)
    rep = orthogonality_check(CrosscapDrawing.zero(am.graph, 2), am, 0, 1)
    assert rep.all_zero and rep.contradiction


def test_orthogonality_needs_equal_copies():
    am = amalgam(k33(), 0, 1, 2)
    with pytest.raises(HypothesisError):
        orthogonality_check(load_drawing("amalg-k33-2"), am, 0, 1)


def test_ramsey_potential():
    assert ramsey_potential(0, 2, 3, 10) == 64
    with pytest.raises(ValueError):
        ramsey_potential(1, 2, 3, 10)
    values = [ramsey_potential(1, 3, 4, w) for w in range(10)]
    assert values == sorted(values)


# -- soundness on data coming from real embeddings ----------------------------


@st.composite
def schemes_of(draw, g):
    rot = tuple(draw(st.sampled_from(cyclic_orders(g.incident[v]))) for v in range(g.n))
    sig = tuple(draw(st.lists(st.sampled_from((1, -1)), min_size=g.m, max_size=g.m)))
    return EmbeddingScheme(g, rot, sig)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 5).flatmap(lambda t: schemes_of(complete_bipartite_3t(t))))
def test_k3t_certificate_is_sound_on_embeddings(s):
    d = scheme_to_drawing(s)
    t = s.graph.n - 3
    a = k3t_matrix(d)
    assert is_tournament(a)
    assert rank(a) >= tournament_rank_floor(t - 1)
    c = k3t_certificate(d)
    assert c.eg_bound <= euler_genus_of_scheme(s)
    assert not k3t_pigeonhole(d).contradiction


AM2 = amalgam(k33(), 0, 1, 2)


@settings(max_examples=60, deadline=None)
@given(schemes_of(AM2.graph))
def test_amalgam_certificate_is_sound_on_embeddings(s):
    d = scheme_to_drawing(s)
    for c in range(2):
        assert wing_cycle_pairs(d, AM2, c).placement_ok
    cert = amalgam_certificate(d, AM2)
    assert cert.eg_bound == 2 <= euler_genus_of_scheme(s)
    assert cert.g_bound == ceil_half(cert.eg_bound)


@pytest.mark.parametrize("t", [2, 3])
def test_bound_does_not_depend_on_the_choice_of_w(t):
    d = load_drawing(f"amalg-k33-{t}")
    h = k33()
    bounds = {amalgam_certificate(d, amalgam(h, 0, 1, t, w)).eg_bound for w in h.neighbors(1)}
    assert bounds == {t}
