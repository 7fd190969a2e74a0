"""Constructed and shipped witness schemes.

Constructions for the infinite families live here as functions; the small
search-found witnesses are shipped as text files in the ``witnesses/`` corpus
next to this module (override with ``Z2LAB_WITNESS_DIR``).
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from dataclasses import dataclass
from typing import Callable

from .crosscap import CrosscapDrawing, drawing_from_text, drawing_to_text, scheme_to_drawing
from .embedding import EmbeddingScheme, restrict_to_edges, scheme_from_text, scheme_to_text
from .families import (
    complete_bipartite_3t,
    complete_graph,
    gen_amalgamation,
    gen_projective_grid,
    grid_vertex,
    k33,
    projective_wall_edges,
    wall_grid_shape,
)
from .graph import Graph
from .search import min_euler_genus_search, min_genus_search

WITNESS_ENV = "Z2LAB_WITNESS_DIR"


def projective_grid_scheme(r: int, s: int) -> EmbeddingScheme:
    """Projective-plane embedding of the r x s projective grid.

    The grid is drawn in a disk in the usual way; the wrap edges leave through
    the boundary, where antipodal points are identified, so they carry
    signature -1. Rotations are clockwise: up, right, down, left.
    """
    g = gen_projective_grid(r, s)
    vid = lambda i, j: grid_vertex(i, j, s)
    wrap = {}
    for i in range(1, r + 1):
        e = g.edge_id(vid(i, 1), vid(r + 1 - i, s))
        wrap[(i, "left")] = e
        wrap[(r + 1 - i, "right")] = e
    rot = [None] * g.n
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            v = vid(i, j)
            order = []
            if i > 1:
                order.append(g.edge_id(v, vid(i - 1, j)))
            order.append(g.edge_id(v, vid(i, j + 1)) if j < s else wrap[(i, "right")])
            if i < r:
                order.append(g.edge_id(v, vid(i + 1, j)))
            order.append(g.edge_id(v, vid(i, j - 1)) if j > 1 else wrap[(i, "left")])
            rot[v] = tuple(order)
    wrap_ids = set(wrap.values())
    sig = tuple(-1 if e in wrap_ids else 1 for e in range(g.m))
    return EmbeddingScheme(g, tuple(rot), sig)


def projective_wall_scheme(t: int) -> EmbeddingScheme:
    """The t-wall inside its projective grid, with the grid's embedding restricted."""
    grid, keep = projective_wall_edges(t)
    r, s = wall_grid_shape(t)
    scheme = restrict_to_edges(projective_grid_scheme(r, s), keep)
    g = scheme.graph
    named = Graph(g.n, g.edges, g.labels, name=f"pwall{t}")
    return EmbeddingScheme(named, scheme.rotation, scheme.signature)


def amalgam_k33_scheme(t: int) -> EmbeddingScheme:
    """Euler-genus-t scheme of t copies of K3,3 glued at two nonadjacent vertices.

    Each copy gets the projective scheme of K3,3 + xy. The copies are glued
    along xy: at x the rotations follow each other in copy order, at y in
    reverse copy order. Deleting xy afterwards leaves Euler genus t.
    """
    h = k33()
    hp = h.add_edge(0, 1)
    xy = hp.edge_id(0, 1)
    base = min_euler_genus_search(hp).witness
    if base.signature[xy] < 0:
        base = base.switch(1)
    g, maps = gen_amalgamation(h, 0, 1, t)
    gp = g.add_edge(0, 1)
    big_xy = gp.edge_id(0, 1)

    def emap(c: int, e: int) -> int:
        u, v = hp.edges[e]
        return gp.edge_id(maps[c][u], maps[c][v])

    def after_xy(r: tuple[int, ...]) -> tuple[int, ...]:
        k = r.index(xy)
        return r[k + 1:] + r[:k]

    rot: list[tuple[int, ...]] = [()] * gp.n
    sig = [1] * gp.m
    for c in range(t):
        for v in range(2, hp.n):
            rot[maps[c][v]] = tuple(emap(c, e) for e in base.rotation[v])
        for e in range(hp.m):
            if e != xy:
                sig[emap(c, e)] = base.signature[e]
    rot[0] = (big_xy,) + tuple(emap(c, e) for c in range(t) for e in after_xy(base.rotation[0]))
    rot[1] = (big_xy,) + tuple(emap(c, e) for c in reversed(range(t)) for e in after_xy(base.rotation[1]))
    glued = EmbeddingScheme(gp, tuple(rot), tuple(sig))
    out = restrict_to_edges(glued, [e for e in range(gp.m) if e != big_xy])
    return EmbeddingScheme(g, out.rotation, out.signature)


def _named(s: EmbeddingScheme, name: str) -> EmbeddingScheme:
    g = s.graph
    return EmbeddingScheme(Graph(g.n, g.edges, g.labels, name), s.rotation, s.signature)


def _searched(g: Graph, orientable: bool, name: str) -> EmbeddingScheme:
    res = min_genus_search(g) if orientable else min_euler_genus_search(g)
    return _named(res.witness, name)


@dataclass(frozen=True)
class WitnessSpec:
    name: str
    euler_genus: int  # value from the closed-form genus formulas
    orientable: bool
    build: Callable[[], EmbeddingScheme]
    description: str


def _catalog() -> list[WitnessSpec]:
    out = [
        WitnessSpec("k5-torus", 2, True, lambda: _searched(complete_graph(5), True, "K5"), "K5 on the torus"),
        WitnessSpec("k33-torus", 2, True, lambda: _searched(k33(), True, "K3,3"), "K3,3 on the torus"),
        WitnessSpec("k5-projective", 1, False, lambda: _searched(complete_graph(5), False, "K5"), "K5 on the projective plane"),
        WitnessSpec(
            "k33e-projective", 1, False,
            lambda: _searched(k33().add_edge(0, 1), False, "K3,3+e"), "K3,3 plus an edge on the projective plane",
        ),
    ]
    # K3,t: orientable genus ceil((t-2)/4), Euler genus ceil((t-2)/2)
    out.append(WitnessSpec(
        "k34-projective", 1, False,
        lambda: _searched(complete_bipartite_3t(4), False, "K3,4"), "K3,4 on the projective plane",
    ))
    for t in (5, 6):
        out.append(WitnessSpec(
            f"k3{t}-torus", 2, True,
            lambda t=t: _searched(complete_bipartite_3t(t), True, f"K3,{t}"), f"K3,{t} on the torus",
        ))
    for t in range(3, 7):
        out.append(WitnessSpec(
            f"pgrid-{t}", 1, False, lambda t=t: projective_grid_scheme(t, t), f"{t}x{t} projective grid",
        ))
        out.append(WitnessSpec(f"pwall-{t}", 1, False, lambda t=t: projective_wall_scheme(t), f"projective {t}-wall"))
    for t in (2, 3):
        out.append(WitnessSpec(
            f"amalg-k33-{t}", t, False,
            lambda t=t: _named(amalgam_k33_scheme(t), f"amalg{t}(K3,3)"), f"{t} copies of K3,3 glued at x, y",
        ))
    return out


CATALOG: dict[str, WitnessSpec] = {w.name: w for w in _catalog()}

# witnesses that also ship a crosscap datum
DRAWINGS = ("k33-torus", "k5-projective", "k34-projective", "k35-torus", "k36-torus", "amalg-k33-2", "amalg-k33-3")


def witness_dir() -> Path:
    env = os.environ.get(WITNESS_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("z2lab") / "witnesses"))


def load_witness(name: str, directory: Path | None = None) -> EmbeddingScheme:
    path = (directory or witness_dir()) / f"{name}.scheme"
    return scheme_from_text(path.read_text())


def load_drawing(name: str, directory: Path | None = None) -> CrosscapDrawing:
    path = (directory or witness_dir()) / f"{name}.drawing"
    return drawing_from_text(path.read_text())


def witness_names() -> list[str]:
    return list(CATALOG)


def write_corpus(directory: Path) -> list[Path]:
    """(Re)build every witness file; output is deterministic."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for w in CATALOG.values():
        s = w.build()
        p = directory / f"{w.name}.scheme"
        p.write_text(scheme_to_text(s) + f"# {w.description}\n")
        written.append(p)
        if w.name in DRAWINGS:
            p = directory / f"{w.name}.drawing"
            p.write_text(drawing_to_text(scheme_to_drawing(s)) + f"# {w.description}\n")
            written.append(p)
    return written
