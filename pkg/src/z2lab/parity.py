"""Crossing parities of plane drawings of K5 and K3,3.

A plane drawing is tracked only through the parity of crossings of each
pair of independent edges. The straight-line convex drawing gives a
reference (two chords cross iff their ends interleave), and pulling a vertex
``v`` across an edge ``f`` flips the pair (f, e) for every edge ``e`` at ``v``.
For K5 and K3,3 every such move flips an even number of independent pairs,
so the number of odd pairs stays odd.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .crosscap import CrosscapDrawing, DrawingError
from .families import complete_graph, k33
from .gf2 import dot
from .graph import Graph, GraphError, SpanningForest


def _pair(e: int, f: int) -> tuple[int, int]:
    return (e, f) if e < f else (f, e)


def independent_pairs(g: Graph, edges: Iterable[int] | None = None) -> list[tuple[int, int]]:
    eids = sorted(range(g.m) if edges is None else set(edges))
    return [(e, f) for e, f in itertools.combinations(eids, 2) if not set(g.edges[e]) & set(g.edges[f])]


@dataclass(frozen=True)
class PlaneParityState:
    graph: Graph
    order: tuple[int, ...]
    odd: frozenset[tuple[int, int]]  # independent pairs with odd crossing parity

    def parity(self, e: int, f: int) -> int:
        return int(_pair(e, f) in self.odd)


def _check_order(g: Graph, order: Sequence[int]):
    if sorted(order) != list(range(g.n)):
        raise GraphError("order must be a permutation of the vertices")


def convex_reference(g: Graph, order: Sequence[int] | None = None) -> PlaneParityState:
    """Vertices on a circle in ``order``, edges as straight chords."""
    order = tuple(range(g.n)) if order is None else tuple(order)
    _check_order(g, order)
    pos = {v: i for i, v in enumerate(order)}
    odd = set()
    for e, f in independent_pairs(g):
        a, b = sorted((pos[g.edges[e][0]], pos[g.edges[e][1]]))
        c, d = (pos[w] for w in g.edges[f])
        if (a < c < b) != (a < d < b):
            odd.add((e, f))
    return PlaneParityState(g, order, frozenset(odd))


def move_flips(g: Graph, v: int, f: int) -> list[tuple[int, int]]:
    """Independent pairs whose parity changes when ``v`` is pulled across ``f``."""
    if v in g.edges[f]:
        raise GraphError(f"vertex {v} is an end of edge {f}")
    ends = set(g.edges[f])
    return [_pair(e, f) for e in g.incident[v] if not ends & set(g.edges[e])]


def vertex_edge_move(state: PlaneParityState, v: int, f: int) -> PlaneParityState:
    odd = set(state.odd)
    for p in move_flips(state.graph, v, f):
        odd ^= {p}
    return PlaneParityState(state.graph, state.order, frozenset(odd))


def independent_odd_count(state: PlaneParityState) -> int:
    return len(state.odd)


# ---------------------------------------------------------------------------


def kuratowski_type(g: Graph) -> str | None:
    """'K5', 'K33' or None, ignoring isolated vertices."""
    gx = g.to_networkx()
    gx.remove_nodes_from([v for v in list(gx) if gx.degree(v) == 0])
    for name, ref in (("K5", complete_graph(5)), ("K33", k33())):
        if nx.is_isomorphic(gx, ref.to_networkx()):
            return name
    return None


def default_order(g: Graph) -> tuple[int, ...]:
    """Natural order, or alternating sides for K3,3."""
    if kuratowski_type(g) == "K33":
        left, right = nx.bipartite.sets(g.to_networkx())
        left, right = sorted(left), sorted(right)
        if 0 not in left:
            left, right = right, left
        return tuple(v for pair in zip(left, right) for v in pair)
    return tuple(range(g.n))


@dataclass(frozen=True)
class KleitmanReport:
    graph: str
    covered: bool
    reference_counts: tuple[tuple[tuple[int, ...], int], ...]  # (order, odd count)
    moves_checked: int
    odd_moves: tuple[tuple[int, int, int], ...]  # (v, f, flips) with odd flips

    @property
    def reference_odd(self) -> bool:
        return all(c % 2 == 1 for _, c in self.reference_counts)

    @property
    def passed(self) -> bool:
        return self.covered and self.reference_odd and not self.odd_moves

    @property
    def conclusion(self) -> str:
        if not self.covered:
            return "not covered: the parity lemma only concerns K5 and K3,3"
        if self.passed:
            return (
                "every drawing reachable from the convex reference by vertex-edge moves "
                "has an odd number of independent odd pairs"
            )
        return "parity claim failed"

    def to_text(self) -> str:
        lines = [f"graph: {self.graph}", f"covered: {'yes' if self.covered else 'no'}"]
        for order, c in self.reference_counts:
            lines.append(f"reference order {' '.join(map(str, order))}: {c} odd pairs ({'odd' if c % 2 else 'even'})")
        lines.append(f"moves checked: {self.moves_checked}, odd-flip moves: {len(self.odd_moves)}")
        for v, f, k in self.odd_moves[:10]:
            lines.append(f"  vertex {v} across edge {f} flips {k}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        lines.append(f"conclusion: {self.conclusion}")
        return "\n".join(lines) + "\n"


def verify_kleitman(g: Graph, random_orders: int = 10, seed: int = 0) -> KleitmanReport:
    """Check the reference parity and every single move exhaustively.

    Besides the default order, ``random_orders`` seeded random vertex orders
    confirm that the reference count is odd regardless of order.
    """
    kind = kuratowski_type(g)
    orders = [default_order(g)]
    rng = random.Random(seed)
    for _ in range(random_orders):
        o = list(range(g.n))
        rng.shuffle(o)
        orders.append(tuple(o))
    counts = tuple((o, independent_odd_count(convex_reference(g, o))) for o in orders)
    checked = 0
    odd = []
    for v in range(g.n):
        for f in range(g.m):
            if v in g.edges[f]:
                continue
            checked += 1
            k = len(move_flips(g, v, f))
            if k % 2:
                odd.append((v, f, k))
    return KleitmanReport(g.name or kind or "graph", kind is not None, counts, checked, tuple(odd))


def deletion_cycle_check(g: Graph, u: int, v: int) -> bool:
    """True iff G - u - v is a single cycle (u, v adjacent)."""
    if not g.has_edge(u, v):
        raise GraphError(f"{u} and {v} are not adjacent")
    keep = [w for w in range(g.n) if w not in (u, v)]
    sub, _ = g.induced(keep)
    if sub.n < 3 or sub.m != sub.n:
        return False
    return all(sub.degree(w) == 2 for w in range(sub.n)) and sub.is_connected()


def xu_deletion_check(h: Graph, x: int, y: int) -> bool:
    """For every neighbour u of x: H - x - u is a cycle with exactly two edges at y."""
    for u in h.neighbors(x):
        keep = [w for w in range(h.n) if w not in (x, u)]
        sub, vmap = h.induced(keep)
        cyc = sub.n >= 3 and sub.m == sub.n and sub.is_connected() and all(sub.degree(w) == 2 for w in range(sub.n))
        if not cyc or y not in vmap or sub.degree(vmap[y]) != 2:
            return False
    return True


@dataclass(frozen=True)
class ForestParityReport:
    kind: str
    count: int
    pairs: tuple[tuple[int, int], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.count % 2 == 1

    @property
    def verdict(self) -> str:
        if self.passed:
            return "odd: consistent with an independently even drawing"
        return "even: datum not realizable as an independently even drawing"


def kuratowski_forest_parity(
    d: CrosscapDrawing, forest: SpanningForest | Iterable[int], k_edges: Iterable[int] | None = None
) -> ForestParityReport:
    """Count independent pairs of non-forest edges of K with ``y_e . y_f = 1``.

    ``k_edges`` selects a K5 or K3,3 subgraph (default: the whole graph); the
    y-vectors must vanish on the forest. An odd count is necessary for the
    datum to come from an independently even drawing.
    """
    g = d.graph
    f_edges = set(forest.tree_edges if isinstance(forest, SpanningForest) else forest)
    k_set = set(range(g.m) if k_edges is None else k_edges)
    kind = kuratowski_type(g.edge_subgraph(sorted(k_set)))
    if kind is None:
        raise GraphError("selected subgraph is neither K5 nor K3,3")
    for e in f_edges:
        if not d.y[e].is_zero():
            raise DrawingError(f"y is not zero on forest edge {e}; normalize first")
    pairs = tuple(p for p in independent_pairs(g, k_set - f_edges) if dot(d.y[p[0]], d.y[p[1]]))
    return ForestParityReport(kind, len(pairs), pairs)
