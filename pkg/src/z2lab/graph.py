"""Simple undirected graphs with stable ids, spanning forests and the cycle space.

Vertices are dense ints ``0..n-1`` and edges are dense ints ``0..m-1``; labels
are optional strings used only for display and for looking vertices up.
Cycle-space elements are int bitmasks over edge ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: Mapping[int, str] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        seen = set()
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {eid} has endpoint outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"edge {eid} is a loop")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"edge {eid} duplicates {key}")
            seen.add(key)
        object.__setattr__(self, "labels", dict(self.labels))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None, name: str = "") -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges), labels or {}, name)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            inc[v].append(eid)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _edge_index(self) -> dict[tuple[int, int], int]:
        return {(min(u, v), max(u, v)): eid for eid, (u, v) in enumerate(self.edges)}

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges and self.labels == other.labels

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        nm = f" {self.name!r}" if self.name else ""
        return f"<Graph{nm} n={self.n} m={self.m}>"

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"no edge {u}-{v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def other(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} not on edge {eid}")

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.incident[v]]

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def check_vertex(self, *vs: int):
        for v in vs:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise GraphError(f"unknown vertex {v!r}")

    def vertex(self, label: str) -> int:
        """Look up a vertex id by label."""
        for v, lab in self.labels.items():
            if lab == label:
                return v
        raise GraphError(f"no vertex labelled {label!r}")

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def endpoints_mask(self, mask: int) -> set[int]:
        out = set()
        for e in iter_bits(mask):
            out.update(self.edges[e])
        return out

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        gone = set(removed)
        comp = [-1] * self.n
        out = []
        for s in range(self.n):
            if s in gone or comp[s] >= 0:
                continue
            cid = len(out)
            comp[s] = cid
            members = [s]
            q = deque([s])
            while q:
                u = q.popleft()
                for w in self.neighbors(u):
                    if w not in gone and comp[w] < 0:
                        comp[w] = cid
                        members.append(w)
                        q.append(w)
            out.append(sorted(members))
        return out

    def is_connected(self, removed: Iterable[int] = ()) -> bool:
        return len(self.components(removed)) <= 1

    def girth(self) -> float:
        """Length of a shortest cycle, ``inf`` for forests."""
        best = float("inf")
        for s in range(self.n):
            dist = {s: 0}
            par = {s: -1}
            q = deque([s])
            while q:
                u = q.popleft()
                for e in self.incident[u]:
                    if e == par[u]:
                        continue
                    w = self.other(e, u)
                    if w in dist:
                        best = min(best, dist[u] + dist[w] + 1)
                    else:
                        dist[w] = dist[u] + 1
                        par[w] = e
                        q.append(w)
        return best

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for w in self.neighbors(u):
                    if color[w] < 0:
                        color[w] = color[u] ^ 1
                        q.append(w)
                    elif color[w] == color[u]:
                        return False
        return True

    def add_edge(self, u: int, v: int) -> "Graph":
        self.check_vertex(u, v)
        return Graph(self.n, self.edges + ((u, v),), self.labels, self.name)

    def edge_subgraph(self, eids: Iterable[int]) -> "Graph":
        """Same vertex set, only the given edges (renumbered in increasing order)."""
        keep = sorted(set(eids))
        return Graph(self.n, tuple(self.edges[e] for e in keep), self.labels, self.name)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on ``keep``; returns it with the old -> new vertex map."""
        keep = sorted(set(keep))
        self.check_vertex(*keep)
        vmap = {v: i for i, v in enumerate(keep)}
        edges = tuple((vmap[u], vmap[v]) for u, v in self.edges if u in vmap and v in vmap)
        labels = {vmap[v]: lab for v, lab in self.labels.items() if v in vmap}
        return Graph(len(keep), edges, labels, self.name), vmap

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        for eid, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, eid=eid)
        return g

    # -- text format -------------------------------------------------------

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"# {self.name}")
        lines.append(f"g {self.n} {self.m}")
        lines.extend(f"e {eid} {u} {v}" for eid, (u, v) in enumerate(self.edges))
        lines.extend(f"l {v} {self.labels[v]}" for v in sorted(self.labels))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        g, _ = parse_graph_block(text.splitlines())
        return g


def clean_lines(lines: Iterable[str]) -> list[str]:
    out = []
    for ln in lines:
        ln = ln.split("#", 1)[0].strip()
        if ln:
            out.append(ln)
    return out


def parse_graph_block(lines: Sequence[str]) -> tuple[Graph, list[str]]:
    """Parse the graph header part of a text file; returns the graph and the
    remaining (non-graph) lines for format extensions."""
    body = clean_lines(lines)
    name = ""
    for ln in lines:
        s = ln.strip()
        if s.startswith("#"):
            name = s[1:].strip()
            break
    if not body or not body[0].startswith("g "):
        raise GraphError("missing 'g <V> <E>' header")
    try:
        _, nv, ne = body[0].split()
        n, m = int(nv), int(ne)
    except ValueError:
        raise GraphError(f"bad header {body[0]!r}") from None
    edges: dict[int, tuple[int, int]] = {}
    labels: dict[int, str] = {}
    rest = []
    for ln in body[1:]:
        parts = ln.split()
        if parts[0] == "e":
            if len(parts) != 4:
                raise GraphError(f"bad edge line {ln!r}")
            eid, u, v = (int(p) for p in parts[1:])
            if eid in edges:
                raise GraphError(f"edge id {eid} repeated")
            edges[eid] = (u, v)
        elif parts[0] == "l":
            if len(parts) < 3:
                raise GraphError(f"bad label line {ln!r}")
            labels[int(parts[1])] = " ".join(parts[2:])
        else:
            rest.append(ln)
    if sorted(edges) != list(range(m)):
        raise GraphError(f"edge ids must be exactly 0..{m - 1}")
    return Graph(n, tuple(edges[i] for i in range(m)), labels, name), rest


# ---------------------------------------------------------------------------
# cycle space


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CycleVec:
    """Element of the cycle space, stored as an edge-id bitmask."""

    mask: int

    @classmethod
    def of(cls, eids: Iterable[int]) -> "CycleVec":
        m = 0
        for e in eids:
            m ^= 1 << e
        return cls(m)

    @property
    def edge_ids(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __xor__(self, other: "CycleVec") -> "CycleVec":
        return CycleVec(self.mask ^ other.mask)

    __add__ = __xor__

    def is_empty(self) -> bool:
        return self.mask == 0

    def vertices(self, g: Graph) -> set[int]:
        return g.endpoints_mask(self.mask)

    def is_even(self, g: Graph) -> bool:
        deg: dict[int, int] = {}
        for e in iter_bits(self.mask):
            for v in g.edges[e]:
                deg[v] = deg.get(v, 0) ^ 1
        return not any(deg.values())

    def is_cycle(self, g: Graph) -> bool:
        """True iff the edges form a single (nonempty, connected, 2-regular) cycle."""
        if not self.mask:
            return False
        deg: dict[int, int] = {}
        for e in iter_bits(self.mask):
            for v in g.edges[e]:
                deg[v] = deg.get(v, 0) + 1
        if any(d != 2 for d in deg.values()):
            return False
        return len(deg) == len(self)


def cycle_sum(c1: CycleVec, c2: CycleVec) -> CycleVec:
    return c1 ^ c2


@dataclass(frozen=True, eq=False)
class SpanningForest:
    graph: Graph
    tree_edges: frozenset[int]
    roots: tuple[int, ...]
    parent_edge: tuple[int, ...]  # -1 at roots
    depth: tuple[int, ...]
    component: tuple[int, ...]  # index into roots

    @property
    def mask(self) -> int:
        m = 0
        for e in self.tree_edges:
            m |= 1 << e
        return m

    def __contains__(self, eid: int) -> bool:
        return eid in self.tree_edges

    def parent(self, v: int) -> int:
        e = self.parent_edge[v]
        return -1 if e < 0 else self.graph.other(e, v)

    def order(self) -> list[int]:
        """Vertices sorted so parents come before children."""
        return sorted(range(self.graph.n), key=lambda v: (self.depth[v], v))

    def path_mask(self, u: int, v: int) -> int:
        """Edge mask of the unique forest path between ``u`` and ``v``."""
        if self.component[u] != self.component[v]:
            raise GraphError(f"vertices {u} and {v} lie in different components")
        m = 0
        while u != v:
            if self.depth[u] >= self.depth[v]:
                e = self.parent_edge[u]
                m ^= 1 << e
                u = self.graph.other(e, u)
            else:
                e = self.parent_edge[v]
                m ^= 1 << e
                v = self.graph.other(e, v)
        return m

    def path_vertices(self, u: int, v: int) -> list[int]:
        left, right = [u], [v]
        while u != v:
            if self.depth[u] >= self.depth[v]:
                u = self.parent(u)
                left.append(u)
            else:
                v = self.parent(v)
                right.append(v)
        return left + right[-2::-1]

    @classmethod
    def from_edges(cls, g: Graph, tree: Iterable[int], roots: Sequence[int] | None = None) -> "SpanningForest":
        """Orient a given acyclic edge set as a rooted forest spanning all vertices."""
        tree = frozenset(tree)
        adj: list[list[int]] = [[] for _ in range(g.n)]
        for e in sorted(tree):
            u, v = g.edges[e]
            adj[u].append(e)
            adj[v].append(e)
        parent = [-2] * g.n
        depth = [0] * g.n
        comp = [-1] * g.n
        rts: list[int] = []
        order = list(roots or []) + list(range(g.n))
        for r in order:
            if parent[r] != -2:
                continue
            parent[r] = -1
            comp[r] = len(rts)
            rts.append(r)
            q = deque([r])
            while q:
                u = q.popleft()
                for e in adj[u]:
                    w = g.other(e, u)
                    if e == parent[u]:
                        continue
                    if parent[w] != -2:
                        raise GraphError("edge set contains a cycle")
                    parent[w] = e
                    depth[w] = depth[u] + 1
                    comp[w] = comp[r]
                    q.append(w)
        return cls(g, tree, tuple(rts), tuple(parent), tuple(depth), tuple(comp))


def spanning_forest(g: Graph, roots: Sequence[int] | None = None) -> SpanningForest:
    """BFS forest; components are rooted at the given roots, then at their lowest vertex."""
    if roots:
        g.check_vertex(*roots)
    seen = [False] * g.n
    tree = []
    for r in list(roots or []) + list(range(g.n)):
        if seen[r]:
            continue
        seen[r] = True
        q = deque([r])
        while q:
            u = q.popleft()
            for e in sorted(g.incident[u], key=lambda e: g.other(e, u)):
                w = g.other(e, u)
                if not seen[w]:
                    seen[w] = True
                    tree.append(e)
                    q.append(w)
    return SpanningForest.from_edges(g, tree, roots)


def fundamental_cycle(g: Graph, forest: SpanningForest, eid: int) -> CycleVec:
    if eid in forest.tree_edges:
        raise GraphError(f"edge {eid} belongs to the forest")
    u, v = g.edges[eid]
    return CycleVec(forest.path_mask(u, v) | (1 << eid))


def fundamental_cycles(g: Graph, forest: SpanningForest) -> dict[int, CycleVec]:
    return {e: fundamental_cycle(g, forest, e) for e in range(g.m) if e not in forest.tree_edges}


def decompose(g: Graph, forest: SpanningForest, c: CycleVec) -> list[int]:
    """Non-tree edges whose fundamental cycles XOR to ``c``."""
    return [e for e in c.edge_ids if e not in forest.tree_edges]


def glue_vertices(g: Graph, u: int, v: int) -> Graph:
    """Replace ``u`` and ``v`` by one fresh vertex adjacent to N(u) | N(v) - {u, v}.

    The fresh vertex takes the last id; the other vertices keep their
    relative order. Parallel edges merge and the edge ``uv`` disappears.
    """
    g.check_vertex(u, v)
    if u == v:
        raise GraphError("cannot glue a vertex to itself")
    keep = [x for x in range(g.n) if x not in (u, v)]
    vmap = {x: i for i, x in enumerate(keep)}
    w = len(keep)
    vmap[u] = vmap[v] = w
    edges = []
    seen = set()
    for a, b in g.edges:
        a2, b2 = vmap[a], vmap[b]
        if a2 == b2:
            continue
        key = (min(a2, b2), max(a2, b2))
        if key in seen:
            continue
        seen.add(key)
        edges.append((a2, b2))
    labels = {vmap[x]: lab for x, lab in g.labels.items() if x not in (u, v)}
    lu, lv = g.labels.get(u), g.labels.get(v)
    if lu is not None or lv is not None:
        labels[w] = f"{lu or u}+{lv or v}"
    return Graph(w + 1, tuple(edges), labels, g.name)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    labels = {}
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        labels.update({v + off: lab for v, lab in g.labels.items()})
        off += g.n
    return Graph(off, tuple(edges), labels)
