import pytest
from hypothesis import given, settings, strategies as st

from z2lab.corpus import CATALOG, load_witness
from z2lab.embedding import (
    EmbeddingScheme,
    SchemeError,
    count_faces,
    delete_face_vertices,
    euler_characteristic,
    euler_formula_bound,
    euler_genus_of_scheme,
    genus_formula_bound,
    genus_of_scheme,
    restrict_to_edges,
    scheme_from_text,
    scheme_to_text,
    surface_name,
    trace_faces,
)
from z2lab.families import complete_bipartite_3t, complete_graph, k33
from z2lab.graph import Graph

from conftest import graphs
from oracles import cyclic_orders, face_count


def planar_k4():
    # vertex 0 in the middle of the triangle 1, 2, 3; clockwise neighbour orders
    return EmbeddingScheme.from_neighbor_rotation(complete_graph(4), [[1, 2, 3], [0, 3, 2], [3, 0, 1], [1, 0, 2]])


def test_planar_k4_faces():
    s = planar_k4()
    assert count_faces(s) == 4
    assert euler_genus_of_scheme(s) == 0
    assert surface_name(s) == "M0"


def test_shipped_torus_witnesses():
    assert count_faces(load_witness("k5-torus")) == 5
    assert count_faces(load_witness("k33-torus")) == 3
    assert euler_genus_of_scheme(load_witness("k33-torus")) == 2
    assert genus_of_scheme(load_witness("k5-torus")) == 1


def test_projective_k5_witness():
    s = load_witness("k5-projective")
    assert count_faces(s) == 6
    assert euler_genus_of_scheme(s) == 1
    assert not s.is_orientable()
    with pytest.raises(SchemeError):
        genus_of_scheme(s)


def test_euler_formula_bound_examples():
    assert euler_formula_bound(complete_bipartite_3t(7)) == 3
    assert euler_formula_bound(complete_graph(5)) == 1
    cycle5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert euler_formula_bound(cycle5) == 0
    assert genus_formula_bound(complete_graph(5)) == 1


def test_scheme_rejects_bad_rotation():
    g = complete_graph(3)
    with pytest.raises(SchemeError):
        EmbeddingScheme(g, ((0, 1), (0, 2), (0,)), (1, 1, 1))
    with pytest.raises(SchemeError):
        EmbeddingScheme(g, g.incident, (1, 2, 1))


@st.composite
def schemes(draw, max_n=6):
    g = draw(graphs(min_n=2, max_n=max_n, connected=True))
    rot = tuple(draw(st.sampled_from(cyclic_orders(g.incident[v]))) for v in range(g.n))
    sig = tuple(draw(st.lists(st.sampled_from((1, -1)), min_size=g.m, max_size=g.m)))
    return EmbeddingScheme(g, rot, sig)


@settings(max_examples=200)
@given(schemes())
def test_face_count_matches_reference_tracer(s):
    assert count_faces(s) == face_count(s)


@given(schemes())
def test_euler_characteristic_shape(s):
    chi = euler_characteristic(s)
    eg = euler_genus_of_scheme(s)
    assert eg == 2 - chi and eg >= 0
    if s.all_positive():
        assert s.is_orientable() and eg % 2 == 0


@given(schemes(), st.data())
def test_switches_preserve_faces(s, data):
    v = data.draw(st.integers(0, s.graph.n - 1))
    t = s.switch(v)
    assert count_faces(t) == count_faces(s)
    assert t.is_orientable() == s.is_orientable()
    assert count_faces(s.mirror()) == count_faces(s)
    assert count_faces(s.normalized()) == count_faces(s)


@given(schemes())
def test_text_round_trip(s):
    assert scheme_from_text(scheme_to_text(s)) == s


def test_delete_outer_face_of_k4():
    s = planar_k4()
    fs = trace_faces(s)
    outer = next(k for k, f in enumerate(fs) if f.vertices() == {1, 2, 3})
    s2, vmap = delete_face_vertices(s, outer)
    assert (s2.graph.n, s2.graph.m) == (1, 0)
    assert vmap == {0: 0}


def test_delete_stale_face_index():
    s = planar_k4()
    with pytest.raises(SchemeError):
        delete_face_vertices(s, 4)
    other = trace_faces(load_witness("k5-torus")).faces[0]
    with pytest.raises(SchemeError):
        delete_face_vertices(s, other)


def test_restrict_to_spanning_subgraph():
    s = load_witness("k5-torus")
    sub = restrict_to_edges(s, range(1, s.graph.m))
    assert sub.graph.m == s.graph.m - 1
    assert euler_genus_of_scheme(sub) <= 2


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_witness_values(name):
    w = CATALOG[name]
    s = load_witness(name)
    assert euler_genus_of_scheme(s) == w.euler_genus
    assert s.is_orientable() == w.orientable
    assert euler_formula_bound(s.graph) <= w.euler_genus
