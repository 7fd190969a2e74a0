import networkx as nx
import pytest
from hypothesis import given, strategies as st

from z2lab.families import complete_graph, k33
from z2lab.graph import (
    CycleVec,
    Graph,
    GraphError,
    SpanningForest,
    cycle_sum,
    decompose,
    disjoint_union,
    fundamental_cycle,
    fundamental_cycles,
    glue_vertices,
    spanning_forest,
)

from conftest import graphs


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def iso(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_text_round_trip():
    g = k33()
    g2 = Graph.from_text(g.to_text())
    assert g2 == g and g2.name == g.name


def test_glue_path_ends():
    g = glue_vertices(path(3), 0, 2)
    assert g.n == 2 and g.m == 1 and g.has_edge(0, 1)


def test_glue_two_triangles_gives_bowtie():
    g = glue_vertices(disjoint_union([cycle(3), cycle(3)]), 0, 3)
    assert (g.n, g.m) == (5, 6)
    assert sorted(g.degree(v) for v in range(g.n)) == [2, 2, 2, 2, 4]


def test_glue_adjacent_in_k4_gives_triangle():
    g = glue_vertices(complete_graph(4), 0, 1)
    assert (g.n, g.m) == (3, 3)
    assert iso(g, complete_graph(3))


def test_glue_same_vertex_fails():
    with pytest.raises(GraphError):
        glue_vertices(path(3), 1, 1)


@given(graphs(min_n=2, max_n=6), graphs(min_n=1, max_n=5), st.data())
def test_glue_commutes_with_disjoint_union(a, b, data):
    u, v = data.draw(st.lists(st.integers(0, a.n - 1), min_size=2, max_size=2, unique=True))
    left = glue_vertices(disjoint_union([a, b]), u, v)
    right = disjoint_union([glue_vertices(a, u, v), b])
    assert iso(left, right)


def test_spanning_forest_examples():
    assert len(spanning_forest(k33(), [0]).tree_edges) == 5
    two = disjoint_union([complete_graph(5), complete_graph(5)])
    f = spanning_forest(two)
    assert len(f.tree_edges) == 8 and len(f.roots) == 2
    empty = Graph.from_edges(3, [])
    f = spanning_forest(empty)
    assert f.roots == (0, 1, 2) and not f.tree_edges


def test_forest_from_edges_rejects_cycles():
    with pytest.raises(GraphError):
        SpanningForest.from_edges(cycle(3), [0, 1, 2])


def test_fundamental_cycle_k33_example():
    g = k33()  # a, b, c = 0, 1, 2; u0, u1, u2 = 3, 4, 5
    e = g.edge_id
    forest = SpanningForest.from_edges(g, [e(0, 3), e(0, 4), e(0, 5), e(1, 3), e(2, 3)])
    c = fundamental_cycle(g, forest, e(1, 4))
    assert set(c.edge_ids) == {e(1, 4), e(0, 4), e(0, 3), e(1, 3)}
    with pytest.raises(GraphError):
        fundamental_cycle(g, forest, e(0, 3))


def test_fundamental_cycle_of_chord_in_c5():
    g = cycle(5)
    forest = SpanningForest.from_edges(g, [0, 1, 2, 3])
    assert fundamental_cycle(g, forest, 4) == CycleVec.of(range(5))


def test_cycle_sum_examples():
    g = k33()
    forest = spanning_forest(g)
    fc = list(fundamental_cycles(g, forest).values())
    assert cycle_sum(fc[0], fc[0]).is_empty()
    shared = [(a, b) for a in fc for b in fc if a != b and len(set(a.edge_ids) & set(b.edge_ids)) == 1]
    a, b = shared[0]
    s = cycle_sum(a, b)
    assert s.is_cycle(g)
    assert set(s.edge_ids) == set(a.edge_ids) ^ set(b.edge_ids)
    two = disjoint_union([cycle(3), cycle(4)])
    c1, c2 = CycleVec.of(range(3)), CycleVec.of(range(3, 7))
    assert cycle_sum(c1, c2) == CycleVec.of(range(7))


@given(graphs(max_n=7), st.data())
def test_fundamental_cycles_form_a_basis(g, data):
    forest = spanning_forest(g)
    fc = fundamental_cycles(g, forest)
    assert len(fc) == g.m - g.n + len(forest.roots)
    if not fc:
        return
    picks = data.draw(st.lists(st.sampled_from(sorted(fc)), unique=True))
    c = CycleVec(0)
    for e in picks:
        c = c ^ fc[e]
    assert c.is_even(g)
    again = CycleVec(0)
    for e in decompose(g, forest, c):
        again = again ^ fc[e]
    assert again == c
