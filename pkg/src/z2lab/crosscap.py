"""Plane-with-crosscaps model of drawings.

A drawing on the nonorientable surface N_h is kept only through its parity
data: for each edge a vector ``y_e`` in GF(2)^h recording how often the edge
passes through each crosscap, and a sparse symmetric set ``x`` of edge pairs
that cross an odd number of times away from the crosscaps. The homology
class of a cycle is the XOR of its edges' y-vectors and the intersection
form is the dot product of classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import networkx as nx

from .embedding import EmbeddingScheme, euler_genus_of_scheme
from .gf2 import BitVec, Gf2Matrix, basis_map, dot, gram_factor, gram_matrix, is_alternating, rank
from .graph import (
    CycleVec,
    Graph,
    GraphError,
    SpanningForest,
    clean_lines,
    iter_bits,
    parse_graph_block,
    spanning_forest,
)


class DrawingError(ValueError):
    pass


def _pair(e: int, f: int) -> tuple[int, int]:
    return (e, f) if e < f else (f, e)


@dataclass(frozen=True)
class CrosscapDrawing:
    graph: Graph
    h: int
    y: tuple[BitVec, ...]  # indexed by edge id
    x: frozenset[tuple[int, int]] = field(default_factory=frozenset)  # odd outside pairs, e < f

    def __post_init__(self):
        object.__setattr__(self, "y", tuple(self.y))
        object.__setattr__(self, "x", frozenset(_pair(*p) for p in self.x))
        if self.h < 0:
            raise DrawingError("h must be nonnegative")
        if len(self.y) != self.graph.m:
            raise DrawingError("need one y-vector per edge")
        for e, v in enumerate(self.y):
            if v.length != self.h:
                raise DrawingError(f"y-vector of edge {e} has length {v.length}, expected {self.h}")
        for e, f in self.x:
            if e == f:
                raise DrawingError("x entries need two distinct edges")
            if not (0 <= e < self.graph.m and 0 <= f < self.graph.m):
                raise DrawingError(f"x entry ({e}, {f}) names an unknown edge")

    @classmethod
    def zero(cls, g: Graph, h: int) -> "CrosscapDrawing":
        return cls(g, h, tuple(BitVec.zeros(h) for _ in range(g.m)))

    @classmethod
    def from_vectors(
        cls, g: Graph, h: int, y: Mapping[int, BitVec | str], x: Iterable[tuple[int, int]] = ()
    ) -> "CrosscapDrawing":
        """Edges missing from ``y`` get the zero vector."""
        vecs = []
        for e in range(g.m):
            v = y.get(e)
            if v is None:
                v = BitVec.zeros(h)
            elif isinstance(v, str):
                v = BitVec.from_str(v)
            vecs.append(v)
        return cls(g, h, tuple(vecs), frozenset(x))

    def x_value(self, e: int, f: int) -> int:
        return int(_pair(e, f) in self.x)

    def independent(self, e: int, f: int) -> bool:
        return not set(self.graph.edges[e]) & set(self.graph.edges[f])

    def with_y(self, y: Iterable[BitVec], h: int | None = None) -> "CrosscapDrawing":
        return CrosscapDrawing(self.graph, self.h if h is None else h, tuple(y), self.x)

    def restrict(self, edges: Iterable[int]) -> tuple["CrosscapDrawing", dict[int, int]]:
        """Datum of an edge subgraph; returns it with the old -> new edge map."""
        keep = sorted(set(edges))
        emap = {e: i for i, e in enumerate(keep)}
        sub = self.graph.edge_subgraph(keep)
        x = {(emap[a], emap[b]) for a, b in self.x if a in emap and b in emap}
        return CrosscapDrawing(sub, self.h, tuple(self.y[e] for e in keep), frozenset(x)), emap


# ---------------------------------------------------------------------------
# evenness, homology, intersection form


def is_independently_even(d: CrosscapDrawing) -> bool:
    return not any(d.independent(e, f) for e, f in d.x)


def evenize_adjacent(d: CrosscapDrawing) -> CrosscapDrawing:
    """Drop odd entries on adjacent pairs (a local redraw near the shared vertex fixes them)."""
    return CrosscapDrawing(d.graph, d.h, d.y, frozenset(p for p in d.x if d.independent(*p)))


def _check_cycle(d: CrosscapDrawing, c: CycleVec):
    if c.mask >> d.graph.m:
        raise GraphError("cycle uses edges outside the drawing's graph")


def cycle_homology(d: CrosscapDrawing, c: CycleVec) -> BitVec:
    _check_cycle(d, c)
    bits = 0
    for e in iter_bits(c.mask):
        bits ^= d.y[e].bits
    return BitVec(d.h, bits)


def intersection_form(d: CrosscapDrawing, c1: CycleVec, c2: CycleVec) -> int:
    return dot(cycle_homology(d, c1), cycle_homology(d, c2))


# ---------------------------------------------------------------------------
# vertex moves, forest normalization, compression


def vertex_move(d: CrosscapDrawing, v: int, z: BitVec) -> CrosscapDrawing:
    """Pull ``v`` through the crosscaps in ``z``: every edge at ``v`` picks up ``z``."""
    y = list(d.y)
    for e in d.graph.incident[v]:
        y[e] = y[e] ^ z
    return d.with_y(y)


def normalize_forest(d: CrosscapDrawing, forest: SpanningForest | None = None) -> CrosscapDrawing:
    """Equivalent datum with ``y = 0`` on every forest edge.

    Vertices are moved parents-first: the move at ``v`` clears its parent
    edge and only touches edges deeper in the forest or outside it, so no
    cleared edge is disturbed again. Every cycle keeps its class because a
    move adds ``z`` to both cycle edges at ``v``.
    """
    g = d.graph
    forest = forest or spanning_forest(g)
    if forest.graph != g:
        raise GraphError("forest belongs to a different graph")
    y = list(d.y)
    for v in forest.order():
        e = forest.parent_edge[v]
        if e < 0 or y[e].is_zero():
            continue
        z = y[e]
        for f in g.incident[v]:
            y[f] = y[f] ^ z
    return d.with_y(y)


def span_dimension(d: CrosscapDrawing) -> int:
    return basis_map(list(d.y))[0] if d.graph.m else 0


def compress(d: CrosscapDrawing) -> CrosscapDrawing:
    """Re-express the y-vectors in as few crosscaps as the dot products allow.

    With ``k`` the dimension of the span of the y-vectors, the result has
    ``h = k`` coordinates, except when the induced form on the span is
    alternating and nondegenerate (an orientable surface), which needs one
    more. All pairwise dot products, hence all intersection-form values, are
    unchanged.
    """
    if not is_independently_even(d):
        raise DrawingError("compress needs an independently even datum")
    vecs = list(d.y)
    if not vecs:
        return d.with_y([], h=0)
    k, coords, basis = basis_map(vecs)
    if k == 0:
        return d.with_y([BitVec.zeros(0)] * len(vecs), h=0)
    images = gram_factor(gram_matrix(basis))
    h2 = max(k, images[0].length)
    images = [v.padded(h2) for v in images]
    out = []
    for v in vecs:
        c = coords(v)
        bits = 0
        for i in iter_bits(c.bits):
            bits ^= images[i].bits
        out.append(BitVec(h2, bits))
    return d.with_y(out, h=h2)


def orientable_to_crosscap_h(genus: int) -> int:
    """Crosscaps that host the genus-``genus`` orientable surface minus a point."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    return 2 * genus + 1


# ---------------------------------------------------------------------------
# consistency checks


@dataclass(frozen=True)
class ConsistencyReport:
    pairs_checked: int
    violations: tuple[tuple[CycleVec, CycleVec, int, int], ...]  # (C1, C2, form, x-sum)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "consistent" if self.passed else "not realizable"


def simple_cycles(g: Graph, limit: int | None = None, length_bound: int | None = None) -> list[CycleVec]:
    """Simple cycles as edge masks, in networkx's deterministic order."""
    out = []
    gx = g.to_networkx()
    for cyc in nx.simple_cycles(gx, length_bound=length_bound):
        if len(cyc) < 3:
            continue
        out.append(CycleVec.of(g.edge_id(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))))
        if limit is not None and len(out) >= limit:
            break
    return out


def homology_consistency_check(
    d: CrosscapDrawing, samples: int = 1000, cycles: Iterable[CycleVec] | None = None
) -> ConsistencyReport:
    """Vertex-disjoint cycles must meet an even number of times in total.

    For each disjoint pair the crosscap part of their crossing parity is the
    intersection form and the rest is the sum of ``x`` over cross pairs; the
    two must agree. At most ``samples`` pairs are checked.
    """
    g = d.graph
    cyc = list(cycles) if cycles is not None else simple_cycles(g, limit=4 * samples + 8)
    verts = [c.vertices(g) for c in cyc]
    checked = 0
    bad = []
    for i, j in itertools.combinations(range(len(cyc)), 2):
        if checked >= samples:
            break
        if verts[i] & verts[j]:
            continue
        checked += 1
        form = intersection_form(d, cyc[i], cyc[j])
        xs = sum(d.x_value(e, f) for e in cyc[i].edge_ids for f in cyc[j].edge_ids) & 1
        if form != xs:
            bad.append((cyc[i], cyc[j], form, xs))
    return ConsistencyReport(checked, tuple(bad))


# ---------------------------------------------------------------------------
# from embedding schemes


def _tree_boundary(s: EmbeddingScheme, forest: SpanningForest) -> list[int]:
    """Cotree edge ends in the order met walking once around the tree.

    Contracting the tree leaves one vertex whose rotation is this sequence;
    every cotree edge appears twice.
    """
    g = s.graph
    root = forest.roots[0]
    seq: list[int] = []
    rot = s.rotation

    # stack of (vertex, remaining edges to process in order)
    def edges_after(v: int, entry: int) -> list[int]:
        r = rot[v]
        if entry < 0:
            return list(r)
        k = r.index(entry)
        return [r[(k + i) % len(r)] for i in range(1, len(r))]

    stack = [(root, iter(edges_after(root, -1)))]
    while stack:
        v, it = stack[-1]
        e = next(it, None)
        if e is None:
            stack.pop()
            continue
        if e in forest.tree_edges:
            w = g.other(e, v)
            if forest.parent_edge[w] == e:
                stack.append((w, iter(edges_after(w, e))))
            # the parent edge is where we came from; nothing to record
        else:
            seq.append(e)
    return seq


def scheme_gram(s: EmbeddingScheme, forest: SpanningForest | None = None) -> tuple[list[int], Gf2Matrix, EmbeddingScheme]:
    """Intersection form on the fundamental cycles of a connected scheme.

    Returns the cotree edges, their Gram matrix (interlacing off the
    diagonal, twisted loops on it) and the tree-normalized scheme.
    """
    g = s.graph
    if not g.is_connected():
        raise DrawingError("scheme_to_drawing needs a connected graph")
    forest = forest or spanning_forest(g)
    ns = s.normalized(forest)
    seq = _tree_boundary(ns, forest)
    cotree = sorted(set(seq))
    pos: dict[int, list[int]] = {e: [] for e in cotree}
    for i, e in enumerate(seq):
        pos[e].append(i)
    idx = {e: k for k, e in enumerate(cotree)}

    def interlace(e: int, f: int) -> int:
        a1, a2 = pos[e]
        return sum(a1 < b < a2 for b in pos[f]) & 1

    def entry(i: int, j: int) -> int:
        e, f = cotree[i], cotree[j]
        if i == j:
            return int(ns.signature[e] < 0)
        return interlace(e, f)

    gram = Gf2Matrix.from_function(len(cotree), len(cotree), entry)
    assert all(len(pos[e]) == 2 for e in cotree) and len(idx) == len(cotree)
    return cotree, gram, ns


def scheme_to_drawing(s: EmbeddingScheme, forest: SpanningForest | None = None) -> CrosscapDrawing:
    """Crosscap datum of a cellular embedding: y is 0 on a spanning tree and
    the cotree vectors realize the intersection form of the surface.

    Nonorientable surfaces of Euler genus k use h = k crosscaps; orientable
    genus-g surfaces use h = 2g + 1, matching ``orientable_to_crosscap_h``.
    """
    g = s.graph
    cotree, gram, ns = scheme_gram(s, forest)
    eg = euler_genus_of_scheme(s)
    r = rank(gram)
    if r != eg:
        raise DrawingError(f"form rank {r} does not match Euler genus {eg}")
    if is_alternating(gram) != s.is_orientable():
        raise DrawingError("form parity disagrees with orientability")
    h = orientable_to_crosscap_h(eg // 2) if s.is_orientable() else eg
    vecs = gram_factor(gram) if cotree else []
    y = [BitVec.zeros(h)] * g.m
    for e, v in zip(cotree, vecs):
        y[e] = v.padded(h)
    return CrosscapDrawing(g, h, tuple(y))


# ---------------------------------------------------------------------------
# text format


def drawing_to_text(d: CrosscapDrawing) -> str:
    lines = [d.graph.to_text().rstrip("\n"), f"h {d.h}"]
    for e, v in enumerate(d.y):
        lines.append(f"y {e}: {v}")
    for e, f in sorted(d.x):
        lines.append(f"x {e} {f}: 1")
    return "\n".join(lines) + "\n"


def drawing_from_text(text: str) -> CrosscapDrawing:
    g, rest = parse_graph_block(text.splitlines())
    h = None
    y: dict[int, BitVec] = {}
    x = set()
    for ln in rest:
        tag, _, body = ln.partition(" ")
        try:
            if tag == "h":
                h = int(body)
            elif tag == "y":
                key, _, bits = body.partition(":")
                e = int(key)
                if not 0 <= e < g.m:
                    raise DrawingError(f"unknown edge {e}")
                if e in y:
                    raise DrawingError(f"duplicate y entry for edge {e}")
                y[e] = BitVec.from_str(bits)
            elif tag == "x":
                key, _, val = body.partition(":")
                e, f = (int(t) for t in key.split())
                if val.strip() not in ("1", "0"):
                    raise DrawingError(f"bad x value in {ln!r}")
                if val.strip() == "1":
                    x.add(_pair(e, f))
            else:
                raise DrawingError(f"unexpected line {ln!r}")
        except ValueError as exc:
            if isinstance(exc, DrawingError):
                raise
            raise DrawingError(f"cannot parse {ln!r}: {exc}") from exc
    if h is None:
        raise DrawingError("missing 'h <n>' line")
    return CrosscapDrawing.from_vectors(g, h, y, x)
