"""Generators for the graph families used throughout: complete (bipartite)
graphs, the eight t-Kuratowski types, projective grids and walls, and
2-amalgamations of xy-wings with their spanning-tree bookkeeping."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import CycleVec, Graph, GraphError, SpanningForest, spanning_forest

KURATOWSKI_KINDS = "abcdefgh"


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2), name=f"K{n}")


def complete_bipartite_3t(t: int) -> Graph:
    """K_{3,t} with vertices a, b, c = 0, 1, 2 and u_i = 3 + i."""
    if t < 1:
        raise ValueError("t must be at least 1")
    edges = [(p, 3 + i) for p in range(3) for i in range(t)]
    labels = {0: "a", 1: "b", 2: "c"}
    labels.update({3 + i: f"u{i}" for i in range(t)})
    return Graph.from_edges(3 + t, edges, labels, name=f"K3,{t}")


def k33() -> Graph:
    return complete_bipartite_3t(3)


def _relabel(g: Graph, prefix: str) -> dict[int, str]:
    return {v: f"{prefix}{g.label(v)}" for v in range(g.n)}


def _disjoint_copies(h: Graph, t: int) -> Graph:
    edges, labels = [], {}
    for i in range(t):
        off = i * h.n
        edges.extend((u + off, v + off) for u, v in h.edges)
        labels.update({v + off: lab for v, lab in _relabel(h, f"c{i}:").items()})
    return Graph.from_edges(h.n * t, edges, labels)


def _one_vertex_copies(h: Graph, z: int, t: int) -> Graph:
    others = [v for v in range(h.n) if v != z]
    labels = {0: "z"}
    edges = []
    nxt = 1
    for i in range(t):
        vmap = {z: 0}
        for v in others:
            vmap[v] = nxt
            labels[nxt] = f"c{i}:{h.label(v)}"
            nxt += 1
        edges.extend((vmap[u], vmap[v]) for u, v in h.edges)
    return Graph.from_edges(nxt, edges, labels)


def gen_amalgamation(h: Graph, x: int, y: int, t: int) -> tuple[Graph, list[dict[int, int]]]:
    """2-amalgamation of ``t`` copies of ``h`` along the nonadjacent pair ``x, y``.

    The glued vertices get ids 0 (``x``) and 1 (``y``); copy ``i`` of any other
    vertex ``v`` is labelled ``c<i>:<label of v>``. Returns the graph and, for
    each copy, the map from vertices of ``h`` to vertices of the result.
    """
    h.check_vertex(x, y)
    if x == y:
        raise GraphError("x and y must differ")
    if h.has_edge(x, y):
        raise GraphError("x and y must be nonadjacent")
    if t < 1:
        raise ValueError("t must be at least 1")
    others = [v for v in range(h.n) if v not in (x, y)]
    labels = {0: "x", 1: "y"}
    edges = []
    maps = []
    nxt = 2
    for i in range(t):
        vmap = {x: 0, y: 1}
        for v in others:
            vmap[v] = nxt
            labels[nxt] = f"c{i}:{h.label(v)}"
            nxt += 1
        maps.append(vmap)
        edges.extend((vmap[u], vmap[v]) for u, v in h.edges)
    name = f"amalg{t}({h.name or 'H'})"
    return Graph.from_edges(nxt, edges, labels, name), maps


def kuratowski_wing(kind: str) -> tuple[Graph, int, int]:
    """The Kuratowski xy-wing behind types f, g, h: (H, x, y)."""
    if kind == "f":
        k5 = complete_graph(5)
        h = Graph.from_edges(5, [e for e in k5.edges if e != (0, 1)], name="K5-e")
        return h, 0, 1
    if kind == "g":
        b = k33()
        h = Graph.from_edges(6, [e for e in b.edges if e != (0, 3)], b.labels, name="K3,3-e")
        return h, 0, 3
    if kind == "h":
        return k33(), 0, 1
    raise ValueError(f"no wing for kind {kind!r}")


def gen_kuratowski(kind: str, t: int) -> Graph:
    """The t-Kuratowski graph of type ``kind`` (one of a..h)."""
    if kind not in KURATOWSKI_KINDS or len(kind) != 1:
        raise ValueError(f"invalid kind {kind!r}; expected one of a..h")
    if t < 1:
        raise ValueError("t must be at least 1")
    if kind == "a":
        g = complete_bipartite_3t(t)
    elif kind == "b":
        g = _disjoint_copies(complete_graph(5), t)
    elif kind == "c":
        g = _disjoint_copies(k33(), t)
    elif kind == "d":
        g = _one_vertex_copies(complete_graph(5), 0, t)
    elif kind == "e":
        g = _one_vertex_copies(k33(), 0, t)
    else:
        h, x, y = kuratowski_wing(kind)
        g, _ = gen_amalgamation(h, x, y, t)
        if kind in "fg":
            g = g.add_edge(0, 1)
    return Graph(g.n, g.edges, g.labels, name=f"kuratowski-{kind}-{t}")


# ---------------------------------------------------------------------------
# projective grids and walls


def grid_vertex(i: int, j: int, s: int) -> int:
    """Id of grid vertex (i, j), 1-based row i and column j."""
    return (i - 1) * s + (j - 1)


def gen_projective_grid(r: int, s: int) -> Graph:
    if r < 3 or s < 3:
        raise ValueError("projective grid needs r, s >= 3")
    vid = lambda i, j: grid_vertex(i, j, s)
    edges = []
    for i in range(1, r + 1):
        for j in range(1, s):
            edges.append((vid(i, j), vid(i, j + 1)))
    for i in range(1, r):
        for j in range(1, s + 1):
            edges.append((vid(i, j), vid(i + 1, j)))
    for i in range(1, r + 1):
        edges.append((vid(i, 1), vid(r + 1 - i, s)))
    labels = {vid(i, j): f"({i},{j})" for i in range(1, r + 1) for j in range(1, s + 1)}
    return Graph.from_edges(r * s, edges, labels, name=f"pgrid{r}x{s}")


def wall_removed_edges(t: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Vertical grid edges deleted to turn the projective grid into the t-wall."""
    if t < 3:
        raise ValueError("walls need t >= 3")
    out = []
    odd_cols = t - 1 if t % 2 else t
    for i in range(1, t):
        if i % 2:
            out.extend(((i, 2 * j), (i + 1, 2 * j)) for j in range(1, odd_cols + 1))
        else:
            out.extend(((i, 2 * j - 1), (i + 1, 2 * j - 1)) for j in range(1, t + 1))
    return out


def wall_grid_shape(t: int) -> tuple[int, int]:
    return (t, 2 * t - 1) if t % 2 else (t, 2 * t)


def projective_wall_edges(t: int) -> tuple[Graph, list[int]]:
    """The projective grid the t-wall lives in, and the grid edge ids it keeps."""
    r, s = wall_grid_shape(t)
    grid = gen_projective_grid(r, s)
    gone = {grid.edge_id(grid_vertex(*p, s), grid_vertex(*q, s)) for p, q in wall_removed_edges(t)}
    return grid, [e for e in range(grid.m) if e not in gone]


def gen_projective_wall(t: int) -> Graph:
    grid, keep = projective_wall_edges(t)
    g = grid.edge_subgraph(keep)
    return Graph(g.n, g.edges, g.labels, name=f"pwall{t}")


# ---------------------------------------------------------------------------
# K_{3,t} cycles and xy-wings


def k3t_cycles(t: int) -> tuple[dict[int, CycleVec], dict[int, CycleVec]]:
    """Cycles C_i = a u_i b u_0 and C'_i = a u_i c u_0 of K_{3,t}, for i = 1..t-1."""
    if t < 2:
        raise ValueError("t must be at least 2")
    g = complete_bipartite_3t(t)
    a, b, c, u0 = 0, 1, 2, 3
    cs, cps = {}, {}
    for i in range(1, t):
        ui = 3 + i
        common = [g.edge_id(a, ui), g.edge_id(a, u0)]
        cs[i] = CycleVec.of(common + [g.edge_id(ui, b), g.edge_id(b, u0)])
        cps[i] = CycleVec.of(common + [g.edge_id(ui, c), g.edge_id(c, u0)])
    return cs, cps


@dataclass(frozen=True)
class WingDecomposition:
    graph: Graph
    x: int
    y: int
    w: int
    inner_tree: frozenset[int]  # F', spanning tree of H - x - y
    tree: frozenset[int]  # F = F' + one edge at x
    e_edges: tuple[int, ...]
    f_edges: tuple[int, ...]
    g_edges: tuple[int, ...]
    h_edge: int

    @property
    def k(self) -> int:
        return len(self.e_edges)

    @property
    def l(self) -> int:
        return len(self.f_edges)

    @property
    def m(self) -> int:
        return len(self.g_edges)

    @property
    def non_tree(self) -> tuple[int, ...]:
        return self.e_edges + self.f_edges + self.g_edges + (self.h_edge,)


def wing_decomposition(h: Graph, x: int, y: int, w: int | None = None) -> WingDecomposition:
    """Split the edges of an xy-wing around the trees F' of H-x-y and F of H-y.

    Defaults are deterministic: BFS trees from the lowest vertex, the lowest
    neighbour of ``x`` inside H-x-y as the leaf edge, and the lowest
    neighbour of ``y`` as ``w``.
    """
    h.check_vertex(x, y)
    if x == y or h.has_edge(x, y):
        raise GraphError("x and y must be distinct and nonadjacent")
    inner = [v for v in range(h.n) if v not in (x, y)]
    if not inner or not h.is_connected(removed=(x, y)):
        raise GraphError("H - x - y must be nonempty and connected")
    root = inner[0]
    seen = {root}
    f_inner = []
    q = deque([root])
    while q:
        u = q.popleft()
        for e in sorted(h.incident[u], key=lambda e: h.other(e, u)):
            v = h.other(e, u)
            if v in (x, y) or v in seen:
                continue
            seen.add(v)
            f_inner.append(e)
            q.append(v)
    xn = sorted(v for v in h.neighbors(x) if v != y)
    if not xn:
        raise GraphError("x has no neighbour in H - x - y")
    leaf_edge = h.edge_id(x, xn[0])
    if w is None:
        yn = sorted(h.neighbors(y))
        if not yn:
            raise GraphError("y is isolated")
        w = yn[0]
    elif not h.has_edge(y, w):
        raise GraphError(f"w={w} is not adjacent to y")
    hedge = h.edge_id(y, w)
    f_in = frozenset(f_inner)
    f_all = f_in | {leaf_edge}
    e_edges = tuple(sorted(e for e in h.incident[x] if e not in f_all))
    f_edges = tuple(sorted(e for e in h.incident[y] if e != hedge))
    g_edges = tuple(
        sorted(e for e, (a, b) in enumerate(h.edges) if x not in (a, b) and y not in (a, b) and e not in f_in)
    )
    return WingDecomposition(h, x, y, w, f_in, f_all, e_edges, f_edges, g_edges, hedge)


@dataclass(frozen=True)
class Amalgam:
    """A 2-amalgamation together with its wing decomposition and copy maps."""

    graph: Graph
    wing: WingDecomposition
    maps: tuple[dict[int, int], ...]

    @property
    def t(self) -> int:
        return len(self.maps)

    @property
    def x(self) -> int:
        return 0

    @property
    def y(self) -> int:
        return 1

    def edge(self, copy: int, eid: int) -> int:
        """Id in the amalgam of edge ``eid`` of the wing, in the given copy."""
        u, v = self.wing.graph.edges[eid]
        mp = self.maps[copy]
        return self.graph.edge_id(mp[u], mp[v])

    def copy_vertices(self, copy: int) -> set[int]:
        return set(self.maps[copy].values())

    def copy_edges(self, copy: int) -> list[int]:
        return [self.edge(copy, e) for e in range(self.wing.graph.m)]

    def forest_edges(self, copy: int) -> set[int]:
        return {self.edge(copy, e) for e in self.wing.tree}

    def tree(self, anchor: int = 0) -> SpanningForest:
        """Spanning tree T = y w^anchor + union of the F^i."""
        edges = {self.edge(anchor, self.wing.h_edge)}
        for i in range(self.t):
            edges |= self.forest_edges(i)
        return SpanningForest.from_edges(self.graph, edges, roots=[self.x])

    def xy_path_mask(self, copy: int) -> int:
        """Edges of the x-y path in F^copy + y w^copy."""
        f = SpanningForest.from_edges(self.graph, self.forest_edges(copy) | {self.edge(copy, self.wing.h_edge)})
        return f.path_mask(self.x, self.y)


def amalgam(h: Graph, x: int, y: int, t: int, w: int | None = None) -> Amalgam:
    wd = wing_decomposition(h, x, y, w)
    g, maps = gen_amalgamation(h, x, y, t)
    return Amalgam(g, wd, tuple(maps))
