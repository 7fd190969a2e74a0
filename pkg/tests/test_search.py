import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from z2lab.embedding import euler_formula_bound, euler_genus_of_scheme, genus_formula_bound
from z2lab.families import complete_bipartite_3t, complete_graph, k33
from z2lab.graph import Graph
from z2lab.search import min_euler_genus_search, min_genus_search

from conftest import graphs
from oracles import brute_force_genus


@pytest.mark.parametrize(
    "g,genus",
    [(complete_graph(4), 0), (complete_graph(5), 1), (k33(), 1), (complete_bipartite_3t(4), 1), (complete_bipartite_3t(6), 1)],
    ids=["K4", "K5", "K33", "K34", "K36"],
)
def test_genus_values(g, genus):
    r = min_genus_search(g)
    assert r.exact and r.value == genus
    assert euler_genus_of_scheme(r.witness) == 2 * genus
    assert r.witness.is_orientable()


@pytest.mark.parametrize(
    "g,eg",
    [(complete_graph(4), 0), (complete_graph(5), 1), (k33(), 1), (complete_bipartite_3t(4), 1)],
    ids=["K4", "K5", "K33", "K34"],
)
def test_euler_genus_values(g, eg):
    r = min_euler_genus_search(g)
    assert r.exact and r.value == eg
    assert euler_genus_of_scheme(r.witness) == eg


def test_brute_force_agrees_on_small_kuratowski_graphs():
    assert brute_force_genus(complete_graph(4), orientable=False) == 0
    assert brute_force_genus(k33(), orientable=True) == 1
    assert brute_force_genus(k33(), orientable=False) == 1
    assert brute_force_genus(complete_graph(5), orientable=True) == 1


small = graphs(min_n=2, max_n=5, connected=True).filter(lambda g: g.m <= 7)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(small)
def test_search_matches_brute_force(g):
    eg = min_euler_genus_search(g)
    genus = min_genus_search(g)
    assert eg.exact and genus.exact
    assert eg.value == brute_force_genus(g, orientable=False)
    assert genus.value == brute_force_genus(g, orientable=True)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=7, connected=True))
def test_search_bounds(g):
    genus = min_genus_search(g, budget=200_000)
    eg = min_euler_genus_search(g, budget=200_000)
    if genus.exact and eg.exact:
        assert eg.value <= 2 * genus.value
        assert euler_formula_bound(g) <= eg.value
        assert genus_formula_bound(g) <= genus.value


def test_budget_exhaustion_is_reported():
    r = min_genus_search(complete_bipartite_3t(6), budget=10)
    assert not r.exact
    assert r.lower_bound == 1


def test_parallel_search_gives_the_same_witness():
    g = complete_graph(5)
    a = min_genus_search(g, jobs=1)
    b = min_genus_search(g, jobs=2)
    assert (a.value, a.witness) == (b.value, b.witness)
    a = min_euler_genus_search(k33(), jobs=1)
    b = min_euler_genus_search(k33(), jobs=2)
    assert (a.value, a.witness) == (b.value, b.witness)


def test_search_is_deterministic():
    a = min_euler_genus_search(complete_bipartite_3t(4))
    b = min_euler_genus_search(complete_bipartite_3t(4))
    assert a.witness == b.witness and a.nodes == b.nodes


def test_disconnected_graph_is_rejected():
    two = Graph.from_edges(10, [(u, v) for u, v in complete_graph(5).edges] + [(u + 5, v + 5) for u, v in complete_graph(5).edges])
    with pytest.raises(ValueError):
        min_genus_search(two)
