"""Exact genus and Euler genus of small Kuratowski-type graphs, next to the
Euler-formula lower bound."""

import time

from z2lab.embedding import euler_formula_bound, surface_name
from z2lab.families import complete_bipartite_3t, complete_graph, k33
from z2lab.search import min_euler_genus_search, min_genus_search

GRAPHS = [
    ("K4", complete_graph(4)),
    ("K5", complete_graph(5)),
    ("K3,3", k33()),
    ("K3,4", complete_bipartite_3t(4)),
    ("K3,5", complete_bipartite_3t(5)),
]

print(f"{'graph':6} {'bound':>5} {'eg':>3} {'g':>3}  surface  nodes")
for name, g in GRAPHS:
    start = time.perf_counter()
    eg = min_euler_genus_search(g)
    genus = min_genus_search(g)
    took = time.perf_counter() - start
    print(
        f"{name:6} {euler_formula_bound(g):5} {eg.value:3} {genus.value:3}  "
        f"{surface_name(eg.witness):7}  {eg.nodes + genus.nodes} ({took:.1f}s)"
    )
