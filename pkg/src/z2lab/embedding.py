"""Embedding schemes (rotation system + edge signatures), face tracing and
Euler genus.

A *flag* is a directed edge traversal together with a local orientation
state: flag ``4*e + 2*d + s`` traverses edge ``e`` from ``edges[e][d]`` to
the other end with state ``s`` (0 = clockwise mode). Traversing an edge of
signature -1 toggles the state; on arrival the next edge is the rotation
successor (state 0) or predecessor (state 1). Face walks are the orbits of
this map, and each face shows up as two orbits, one per direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil
from typing import Sequence

from .graph import Graph, GraphError, SpanningForest, parse_graph_block, spanning_forest


class SchemeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class EmbeddingScheme:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]  # clockwise incident edge ids per vertex
    signature: tuple[int, ...]  # +1 / -1 per edge

    def __post_init__(self):
        g = self.graph
        rot = tuple(tuple(r) for r in self.rotation)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "signature", tuple(self.signature))
        if len(rot) != g.n:
            raise SchemeError("need one rotation per vertex")
        if len(self.signature) != g.m:
            raise SchemeError("need one signature per edge")
        for v in range(g.n):
            if sorted(rot[v]) != sorted(g.incident[v]) or len(set(rot[v])) != len(rot[v]):
                raise SchemeError(f"rotation at {v} is not a permutation of its edges")
        if any(s not in (1, -1) for s in self.signature):
            raise SchemeError("signatures must be +1 or -1")

    @classmethod
    def planar_default(cls, g: Graph) -> "EmbeddingScheme":
        return cls(g, g.incident, (1,) * g.m)

    @classmethod
    def from_neighbor_rotation(cls, g: Graph, rot: Sequence[Sequence[int]], signature=None) -> "EmbeddingScheme":
        """Build from rotations given as cyclic neighbour orders."""
        r = [tuple(g.edge_id(v, w) for w in rot[v]) for v in range(g.n)]
        sig = tuple(signature) if signature is not None else (1,) * g.m
        return cls(g, tuple(r), sig)

    def __eq__(self, other):
        if not isinstance(other, EmbeddingScheme):
            return NotImplemented
        return (self.graph, self.rotation, self.signature) == (other.graph, other.rotation, other.signature)

    def __hash__(self):
        return hash((self.rotation, self.signature))

    @cached_property
    def _succ(self) -> tuple[dict[int, int], ...]:
        out = []
        for r in self.rotation:
            d = len(r)
            out.append({r[i]: r[(i + 1) % d] for i in range(d)})
        return tuple(out)

    @cached_property
    def _pred(self) -> tuple[dict[int, int], ...]:
        out = []
        for r in self.rotation:
            d = len(r)
            out.append({r[i]: r[(i - 1) % d] for i in range(d)})
        return tuple(out)

    def all_positive(self) -> bool:
        return all(s == 1 for s in self.signature)

    def is_orientable(self) -> bool:
        """True iff some set of local switches makes every signature +1."""
        g = self.graph
        side = [-1] * g.n
        for s0 in range(g.n):
            if side[s0] >= 0:
                continue
            side[s0] = 0
            stack = [s0]
            while stack:
                u = stack.pop()
                for e in g.incident[u]:
                    w = g.other(e, u)
                    want = side[u] ^ (self.signature[e] < 0)
                    if side[w] < 0:
                        side[w] = want
                        stack.append(w)
                    elif side[w] != want:
                        return False
        return True

    def switch(self, v: int) -> "EmbeddingScheme":
        """Local switch at ``v``: reverse its rotation and flip its edges' signatures."""
        rot = list(self.rotation)
        rot[v] = tuple(reversed(rot[v]))
        sig = list(self.signature)
        for e in self.graph.incident[v]:
            sig[e] = -sig[e]
        return EmbeddingScheme(self.graph, tuple(rot), tuple(sig))

    def mirror(self) -> "EmbeddingScheme":
        return EmbeddingScheme(self.graph, tuple(tuple(reversed(r)) for r in self.rotation), self.signature)

    def normalized(self, forest: SpanningForest | None = None) -> "EmbeddingScheme":
        """Equivalent scheme with signature +1 on every forest edge."""
        g = self.graph
        forest = forest or spanning_forest(g)
        s = self
        for v in forest.order():
            e = forest.parent_edge[v]
            if e >= 0 and s.signature[e] < 0:
                s = s.switch(v)
        return s

    # -- face map ------------------------------------------------------------

    def flag(self, eid: int, tail: int, state: int = 0) -> int:
        u, v = self.graph.edges[eid]
        if tail == u:
            d = 0
        elif tail == v:
            d = 1
        else:
            raise GraphError(f"{tail} is not an end of edge {eid}")
        return 4 * eid + 2 * d + state

    def flag_parts(self, f: int) -> tuple[int, int, int, int]:
        """(edge, tail, head, state) of a flag."""
        e, d, s = f >> 2, (f >> 1) & 1, f & 1
        u, v = self.graph.edges[e]
        return (e, u, v, s) if d == 0 else (e, v, u, s)

    def next_flag(self, f: int) -> int:
        e, _, head, s = self.flag_parts(f)
        if self.signature[e] < 0:
            s ^= 1
        e2 = self._succ[head][e] if s == 0 else self._pred[head][e]
        return self.flag(e2, head, s)

    def reverse_flag(self, f: int) -> int:
        e, _, head, s = self.flag_parts(f)
        return self.flag(e, head, s ^ (self.signature[e] < 0) ^ 1)


@dataclass(frozen=True)
class Face:
    """One face walk: its flags in order, and the corners it visits.

    ``corners[k]`` is ``(vertex, state)`` at the vertex reached by flag ``k``.
    """

    flags: tuple[int, ...]
    corners: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.flags)

    def vertices(self) -> set[int]:
        return {v for v, _ in self.corners}


@dataclass(frozen=True)
class FaceSet:
    scheme: EmbeddingScheme
    faces: tuple[Face, ...]

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def walks(self) -> list[list[tuple[int, int]]]:
        """Face walks as sequences of directed edge sides ``(edge, tail)``."""
        s = self.scheme
        return [[s.flag_parts(f)[:2] for f in face.flags] for face in self.faces]


def trace_faces(s: EmbeddingScheme) -> FaceSet:
    g = s.graph
    nflags = 4 * g.m
    used = bytearray(nflags)
    faces = []
    for start in range(nflags):
        if used[start]:
            continue
        orbit = []
        f = start
        while True:
            if used[f]:
                raise SchemeError("malformed rotation: face map is not a permutation")
            used[f] = 1
            orbit.append(f)
            f = s.next_flag(f)
            if f == start:
                break
        rev = s.reverse_flag(start)
        if rev in orbit:
            raise SchemeError("face walk coincides with its reverse")
        f = rev
        while not used[f]:
            used[f] = 1
            f = s.next_flag(f)
        corners = []
        for fl in orbit:
            e, _, head, st = s.flag_parts(fl)
            corners.append((head, st ^ (s.signature[e] < 0)))
        faces.append(Face(tuple(orbit), tuple(corners)))
    return FaceSet(s, tuple(faces))


def count_faces(s: EmbeddingScheme) -> int:
    return len(trace_faces(s))


def euler_characteristic(s: EmbeddingScheme) -> int:
    return s.graph.n - s.graph.m + count_faces(s)


def euler_genus_of_scheme(s: EmbeddingScheme) -> int:
    g = s.graph
    if g.n == 0 or not g.is_connected():
        raise SchemeError("Euler genus of a scheme needs a connected graph")
    eg = 2 - euler_characteristic(s)
    if s.is_orientable() and eg % 2:
        raise SchemeError("orientable scheme with odd Euler genus")
    return eg


def genus_of_scheme(s: EmbeddingScheme) -> int:
    """Orientable genus; only defined for orientable schemes."""
    if not s.is_orientable():
        raise SchemeError("scheme is nonorientable")
    return euler_genus_of_scheme(s) // 2


def surface_name(s: EmbeddingScheme) -> str:
    eg = euler_genus_of_scheme(s)
    if s.is_orientable():
        return f"M{eg // 2}"
    return f"N{eg}"


def delete_face_vertices(s: EmbeddingScheme, face: Face | int) -> tuple[EmbeddingScheme, dict[int, int]]:
    """Remove every vertex incident to ``face``; returns the induced scheme and
    the old -> new vertex map. ``face`` is a face of ``trace_faces(s)`` or its index."""
    fs = trace_faces(s)
    if isinstance(face, int):
        if not 0 <= face < len(fs):
            raise SchemeError(f"unknown face index {face}")
        face = fs.faces[face]
    elif face not in fs.faces:
        raise SchemeError("face does not belong to this scheme")
    gone = face.vertices()
    keep = [v for v in range(s.graph.n) if v not in gone]
    sub, vmap = s.graph.induced(keep)
    emap = {}
    for e, (u, v) in enumerate(s.graph.edges):
        if u in vmap and v in vmap:
            emap[e] = sub.edge_id(vmap[u], vmap[v])
    rot = [None] * sub.n
    for v in keep:
        rot[vmap[v]] = tuple(emap[e] for e in s.rotation[v] if e in emap)
    sig = [1] * sub.m
    for e, e2 in emap.items():
        sig[e2] = s.signature[e]
    return EmbeddingScheme(sub, tuple(rot), tuple(sig)), vmap


def restrict_to_edges(s: EmbeddingScheme, keep_edges: Sequence[int]) -> EmbeddingScheme:
    """Induced scheme on a spanning edge subgraph (edge ids renumbered in order)."""
    keep = sorted(set(keep_edges))
    emap = {e: i for i, e in enumerate(keep)}
    sub = s.graph.edge_subgraph(keep)
    rot = tuple(tuple(emap[e] for e in r if e in emap) for r in s.rotation)
    sig = tuple(s.signature[e] for e in keep)
    return EmbeddingScheme(sub, rot, sig)


# -- Euler-formula lower bounds -------------------------------------------


def euler_formula_bound(g: Graph) -> int:
    """Lower bound on the Euler genus from F <= 2E / girth, summed over components."""
    total = 0
    for comp in g.components():
        sub, _ = g.induced(comp)
        girth = sub.girth()
        if girth == float("inf"):
            continue
        b = 2 - sub.n + sub.m - Fraction(2 * sub.m, int(girth))
        total += max(0, ceil(b))
    return total


def genus_formula_bound(g: Graph) -> int:
    """Orientable counterpart: Euler genus of an orientable surface is even."""
    total = 0
    for comp in g.components():
        sub, _ = g.induced(comp)
        total += ceil(euler_formula_bound(sub) / 2)
    return total


# -- text format -------------------------------------------------------------


def scheme_to_text(s: EmbeddingScheme) -> str:
    lines = [s.graph.to_text().rstrip("\n")]
    for v in range(s.graph.n):
        lines.append(f"r {v}: " + " ".join(str(e) for e in s.rotation[v]))
    for e, sg in enumerate(s.signature):
        if sg < 0:
            lines.append(f"s {e}: -1")
    return "\n".join(lines) + "\n"


def scheme_from_text(text: str) -> EmbeddingScheme:
    g, rest = parse_graph_block(text.splitlines())
    rot: dict[int, tuple[int, ...]] = {}
    sig = [1] * g.m
    for ln in rest:
        head, _, tail = ln.partition(":")
        parts = head.split()
        if len(parts) != 2 or parts[0] not in ("r", "s"):
            raise SchemeError(f"unrecognised line {ln!r}")
        idx = int(parts[1])
        if parts[0] == "r":
            if idx in rot:
                raise SchemeError(f"rotation of {idx} given twice")
            rot[idx] = tuple(int(x) for x in tail.split())
        else:
            val = tail.strip()
            if val not in ("+1", "-1", "1"):
                raise SchemeError(f"bad signature {val!r}")
            if not 0 <= idx < g.m:
                raise SchemeError(f"signature for unknown edge {idx}")
            sig[idx] = -1 if val == "-1" else 1
    for v in range(g.n):
        if v not in rot:
            if g.degree(v) > 1:
                raise SchemeError(f"missing rotation for vertex {v}")
            rot[v] = g.incident[v]
    return EmbeddingScheme(g, tuple(rot[v] for v in range(g.n)), tuple(sig))
