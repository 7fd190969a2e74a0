"""Slow, independently written reference implementations used by the tests."""

import itertools

from z2lab.embedding import EmbeddingScheme
from z2lab.graph import Graph, spanning_forest


def face_count(s: EmbeddingScheme) -> int:
    """Classical face tracing: walk with a current local orientation, count
    orbits of (edge side, orientation) and halve, since each face is walked
    once in each direction."""
    g = s.graph
    pos = [{e: i for i, e in enumerate(r)} for r in s.rotation]
    seen = set()
    orbits = 0
    for e0, (a, b) in enumerate(g.edges):
        for tail, head in ((a, b), (b, a)):
            for o in (1, -1):
                if (e0, tail, o) in seen:
                    continue
                orbits += 1
                e, u, v, ori = e0, tail, head, o
                while (e, u, ori) not in seen:
                    seen.add((e, u, ori))
                    ori = ori * s.signature[e]
                    rot = s.rotation[v]
                    nxt = rot[(pos[v][e] + ori) % len(rot)]
                    e, u, v = nxt, v, g.other(nxt, v)
    return orbits // 2


def cyclic_orders(items):
    items = list(items)
    if len(items) <= 2:
        return [tuple(items)]
    first, rest = items[0], items[1:]
    return [(first,) + p for p in itertools.permutations(rest)]


def brute_force_genus(g: Graph, orientable: bool) -> int:
    """Minimum (Euler) genus over every rotation system and, for the Euler
    genus, every signature on the edges outside a spanning tree."""
    tree = spanning_forest(g).tree_edges
    cotree = [e for e in range(g.m) if e not in tree]
    best_faces = 0
    best_eg = None
    sig_choices = [()] if orientable else itertools.product((1, -1), repeat=len(cotree))
    sig_choices = list(sig_choices)
    for rot in itertools.product(*(cyclic_orders(g.incident[v]) for v in range(g.n))):
        for choice in sig_choices:
            sig = [1] * g.m
            for e, c in zip(cotree, choice):
                sig[e] = c
            s = EmbeddingScheme(g, rot, tuple(sig))
            eg = 2 - (g.n - g.m + face_count(s))
            if best_eg is None or eg < best_eg:
                best_eg = eg
    return best_eg // 2 if orientable else best_eg


def shortest_one_sided_radial_cycle(scheme_radial) -> int | None:
    """Enumerate every simple cycle of the radial multigraph by DFS over
    distinct radial edges; return the length of a shortest one with odd
    state sum."""
    rg = scheme_radial
    adj = {}
    for idx, (v, f, bit) in enumerate(rg.edges):
        adj.setdefault(v, []).append((idx, f, bit))
        adj.setdefault(f, []).append((idx, v, bit))
    best = None

    def dfs(start, node, used_edges, visited, parity, length):
        nonlocal best
        if best is not None and length >= best:
            return
        for idx, nb, bit in adj.get(node, []):
            if idx in used_edges:
                continue
            if nb == start:
                if (parity ^ bit) and (best is None or length + 1 < best):
                    best = length + 1
                continue
            if nb in visited:
                continue
            dfs(start, nb, used_edges | {idx}, visited | {nb}, parity ^ bit, length + 1)

    for start in range(rg.n_vertices):
        dfs(start, start, frozenset(), {start}, 0, 0)
    return best
