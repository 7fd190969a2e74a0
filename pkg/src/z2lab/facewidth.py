"""Facewidth of projective-plane embeddings.

On the projective plane a closed curve is noncontractible exactly when it is
one-sided. Curves meeting the graph only in vertices are closed walks in the
radial graph (vertex--face incidences, one edge per corner). Each radial edge
carries the corner's state bit: 1 when the face walk passes the corner against
the vertex's local orientation. A closed radial walk is one-sided iff its
state bits sum to 1, so facewidth is half the length of a shortest odd closed
walk, found by BFS on the parity double cover.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .embedding import EmbeddingScheme, SchemeError, euler_genus_of_scheme, trace_faces


@dataclass(frozen=True)
class RadialGraph:
    """Nodes ``0..n-1`` are graph vertices, ``n..n+F-1`` are faces."""

    n_vertices: int
    n_faces: int
    edges: tuple[tuple[int, int, int], ...]  # (vertex, face node, state bit)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n_vertices + self.n_faces)]
        for v, f, bit in self.edges:
            adj[v].append((f, bit))
            adj[f].append((v, bit))
        return adj


def radial_graph(s: EmbeddingScheme) -> RadialGraph:
    fs = trace_faces(s)
    n = s.graph.n
    edges = []
    for k, face in enumerate(fs.faces):
        for v, st in face.corners:
            edges.append((v, n + k, st))
    return RadialGraph(n, len(fs.faces), tuple(edges))


def shortest_odd_closed_walk(rg: RadialGraph) -> int | None:
    """Length of a shortest closed walk with odd bit-sum, or None if all are even."""
    adj = rg.adjacency()
    best = None
    for start in range(rg.n_vertices):
        dist = {(start, 0): 0}
        q = deque([(start, 0)])
        while q:
            node, par = q.popleft()
            d = dist[(node, par)]
            if best is not None and d + 1 >= best:
                break
            for nb, bit in adj[node]:
                key = (nb, par ^ bit)
                if key not in dist:
                    dist[key] = d + 1
                    q.append(key)
        odd = dist.get((start, 1))
        if odd is not None and (best is None or odd < best):
            best = odd
    return best


def is_one_sided_free(s: EmbeddingScheme) -> bool:
    """True when no radial closed walk is one-sided (all state-sums even)."""
    return shortest_odd_closed_walk(radial_graph(s)) is None


def facewidth_projective(s: EmbeddingScheme) -> int:
    """Facewidth of a cellular embedding in the projective plane."""
    if s.is_orientable() or euler_genus_of_scheme(s) != 1:
        raise SchemeError("facewidth is only implemented for projective-plane schemes")
    length = shortest_odd_closed_walk(radial_graph(s))
    if length is None:  # cannot happen for a nonorientable cellular scheme
        raise SchemeError("no one-sided radial walk found")
    return length // 2
