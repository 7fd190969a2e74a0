"""Exact minimum genus / Euler genus by branch-and-bound over embedding schemes.

Vertices are assigned rotations one at a time in BFS order from a pivot of
maximum degree. In Euler-genus mode the cotree edges (w.r.t. that BFS tree)
also get signatures; tree edges stay +1, which loses nothing since any scheme
can be switched to that form. After each assignment the face walks that have
closed up are counted, and the remaining open flags bound the number of
faces still to come:

    faces <= closed + open_flags // (flags per face >= min face length)

A branch is cut when even that many faces cannot beat the incumbent. The
search also stops as soon as the incumbent meets the Euler-formula bound.

Symmetry: the pivot rotation is taken up to reversal (mirror image). When
every permutation of the pivot's neighbours extends to an automorphism
(pairwise twins, as in K_n and K_{m,n}) the pivot rotation is fixed outright.
"""

from __future__ import annotations

import itertools
import multiprocessing as mp
from collections import deque
from dataclasses import dataclass, field

from .embedding import EmbeddingScheme, SchemeError, euler_formula_bound, genus_formula_bound
from .graph import Graph


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchResult:
    value: int  # genus or Euler genus
    witness: EmbeddingScheme | None
    exact: bool
    nodes: int
    lower_bound: int
    orientable_only: bool

    @property
    def kind(self) -> str:
        return "genus" if self.orientable_only else "euler genus"


def _cyclic_orders(edges: list[int]) -> list[tuple[int, ...]]:
    edges = sorted(edges)
    if len(edges) <= 2:
        return [tuple(edges)]
    first, rest = edges[0], edges[1:]
    return [(first,) + p for p in itertools.permutations(rest)]


def _neighbours_are_twins(g: Graph, v: int) -> bool:
    nbrs = g.neighbors(v)
    sets = {u: set(g.neighbors(u)) for u in nbrs}
    for a, b in itertools.combinations(nbrs, 2):
        if sets[a] - {b} != sets[b] - {a}:
            return False
    return True


@dataclass
class _Plan:
    graph: Graph
    orientable: bool
    order: list[int]
    tree: set[int]
    choices: list[list[tuple[tuple[int, ...], tuple[int, ...], int]]] = field(default_factory=list)
    min_face: int = 3
    lower_bound: int = 0


def _plan(g: Graph, orientable: bool) -> _Plan:
    if g.n == 0 or not g.is_connected():
        raise SchemeError("genus search needs a connected graph")
    pivot = max(range(g.n), key=lambda v: (g.degree(v), -v))
    order = [pivot]
    parent_edge = {pivot: -1}
    q = deque([pivot])
    while q:
        u = q.popleft()
        for e in sorted(g.incident[u], key=lambda e: g.other(e, u)):
            w = g.other(e, u)
            if w not in parent_edge:
                parent_edge[w] = e
                order.append(w)
                q.append(w)
    tree = {e for e in parent_edge.values() if e >= 0}
    pos = {v: i for i, v in enumerate(order)}
    plan = _Plan(g, orientable, order, tree)
    plan.min_face = 4 if g.is_bipartite() else 3
    if g.m == 0:
        plan.min_face = 1
    plan.lower_bound = genus_formula_bound(g) if orientable else euler_formula_bound(g)
    for k, v in enumerate(order):
        rots = _cyclic_orders(list(g.incident[v]))
        if k == 0:
            if _neighbours_are_twins(g, v):
                rots = rots[:1]
            elif len(rots[0]) >= 3:
                rots = [r for r in rots if r[1] < r[-1]]
        if orientable:
            cot = ()
        else:
            cot = tuple(e for e in sorted(g.incident[v]) if e not in tree and pos[g.other(e, v)] < k)
        npat = 1 << len(cot)
        plan.choices.append([(r, cot, p) for r in rots for p in range(npat)])
    return plan


class _Searcher:
    def __init__(self, plan: _Plan, budget: int | None, shared=None, floor: int = -1):
        g = plan.graph
        self.floor = floor
        self.plan = plan
        self.g = g
        self.budget = budget
        self.shared = shared
        self.nodes = 0
        m = g.m
        self.nflags = 4 * m
        self.nxt = [-1] * self.nflags
        self.sig = [0] * m
        self.sig_known = [False] * m
        for e in plan.tree:
            self.sig_known[e] = True
        if plan.orientable:
            self.sig_known = [True] * m
        self.rot: list[tuple[int, ...] | None] = [None] * g.n
        self.closed_orbits = 0
        self.closed_flags = 0
        # orientable mode only follows state-0 flags
        self.total = 2 * m if plan.orientable else 4 * m
        self.per_face = plan.min_face if plan.orientable else 2 * plan.min_face
        self.orbits_per_face = 1 if plan.orientable else 2
        self.base = g.n - g.m  # chi = base + F
        self.best_faces = -1
        self.best_rot = None
        self.best_sig = None
        self.step = 2 if plan.orientable else 1
        # target face count that meets the lower bound
        lb_eg = 2 * plan.lower_bound if plan.orientable else plan.lower_bound
        self.stop_faces = 2 - lb_eg - self.base
        self.done = False

    def _fill(self, v: int, changed: list[int]):
        """Set next pointers for flags heading into ``v`` whose edge sign is known."""
        g = self.g
        rot = self.rot[v]
        d = len(rot)
        states = (0,) if self.plan.orientable else (0, 1)
        for i, e in enumerate(rot):
            if not self.sig_known[e]:
                continue
            a, b = g.edges[e]
            din = 0 if b == v else 1  # flag direction arriving at v
            for s in states:
                f = 4 * e + 2 * din + s
                s2 = s ^ self.sig[e]
                e2 = rot[(i + 1) % d] if s2 == 0 else rot[(i - 1) % d]
                f2 = 4 * e2 + 2 * (0 if g.edges[e2][0] == v else 1) + s2
                self.nxt[f] = f2
                changed.append(f)

    def _fill_edge_head(self, e: int, head: int, changed: list[int]):
        rot = self.rot[head]
        if rot is None:
            return
        g = self.g
        d = len(rot)
        i = rot.index(e)
        a, b = g.edges[e]
        din = 0 if b == head else 1
        for s in (0, 1):
            f = 4 * e + 2 * din + s
            s2 = s ^ self.sig[e]
            e2 = rot[(i + 1) % d] if s2 == 0 else rot[(i - 1) % d]
            self.nxt[f] = 4 * e2 + 2 * (0 if g.edges[e2][0] == head else 1) + s2
            changed.append(f)

    def _close(self, changed: list[int]) -> tuple[int, int]:
        nxt = self.nxt
        seen = set()
        orbits = flags = 0
        for f0 in changed:
            if f0 in seen:
                continue
            f = f0
            length = 0
            while True:
                seen.add(f)
                length += 1
                f = nxt[f]
                if f < 0 or f == f0:
                    break
                if f in seen:
                    # joined a walk traced earlier this round
                    f = -1
                    break
            if f == f0:
                orbits += 1
                flags += length
        return orbits, flags

    def _apply(self, v: int, choice) -> tuple[list[int], int, int]:
        rot, cot, pat = choice
        self.rot[v] = rot
        changed: list[int] = []
        for j, e in enumerate(cot):
            self.sig[e] = (pat >> j) & 1
            self.sig_known[e] = True
        self._fill(v, changed)
        for e in cot:
            self._fill_edge_head(e, self.g.other(e, v), changed)
        orbits, flags = self._close(changed)
        self.closed_orbits += orbits
        self.closed_flags += flags
        return changed, orbits, flags

    def _undo(self, v: int, choice, changed, orbits, flags):
        for f in changed:
            self.nxt[f] = -1
        for e in choice[1]:
            self.sig_known[e] = False
            self.sig[e] = 0
        self.rot[v] = None
        self.closed_orbits -= orbits
        self.closed_flags -= flags

    def _max_faces(self) -> int:
        open_flags = self.total - self.closed_flags
        return self.closed_orbits // self.orbits_per_face + open_flags // self.per_face

    def _target(self) -> int:
        """Fewest faces a leaf needs to be worth visiting."""
        if self.best_faces < 0:
            t = 0
        else:
            t = self.best_faces + self.step
        # a known face count from elsewhere; ties still descend (lex-first witness)
        t = max(t, self.floor)
        if self.shared is not None:
            with self.shared.get_lock():
                sf = self.shared.value
            # a tie with another worker must survive for the lex-first witness
            t = max(t, sf)
        return t

    def _dfs(self, k: int):
        if self.done:
            return
        order = self.plan.order
        if k == len(order):
            faces = self.closed_orbits // self.orbits_per_face
            if faces > self.best_faces:
                self.best_faces = faces
                self.best_rot = list(self.rot)
                self.best_sig = list(self.sig)
                if self.shared is not None:
                    with self.shared.get_lock():
                        if faces > self.shared.value:
                            self.shared.value = faces
                if faces >= self.stop_faces:
                    self.done = True
            return
        v = order[k]
        for choice in self.plan.choices[k]:
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise BudgetExceeded
            changed, orbits, flags = self._apply(v, choice)
            if self._max_faces() >= self._target():
                self._dfs(k + 1)
            self._undo(v, choice, changed, orbits, flags)
            if self.done:
                return

    def run_prefix(self, prefix: list):
        """Search below fixed choices for the first len(prefix) vertices."""
        applied = []
        for k, choice in enumerate(prefix):
            v = self.plan.order[k]
            applied.append((v, choice) + self._apply(v, choice))
        try:
            if self._max_faces() >= self._target():
                self._dfs(len(prefix))
        finally:
            for v, choice, changed, orbits, flags in reversed(applied):
                self._undo(v, choice, changed, orbits, flags)

    def witness(self) -> EmbeddingScheme | None:
        if self.best_rot is None:
            return None
        sig = tuple(-1 if b else 1 for b in self.best_sig)
        return EmbeddingScheme(self.g, tuple(self.best_rot), sig)


def _value(plan: _Plan, faces: int) -> int:
    g = plan.graph
    eg = 2 - (g.n - g.m + faces)
    return eg // 2 if plan.orientable else eg


_shared = None


def _init_worker(value):
    global _shared
    _shared = value


def _worker(args):
    plan, budget, prefix, floor = args
    s = _Searcher(plan, budget, _shared, floor)
    exhausted = False
    try:
        s.run_prefix(prefix)
    except BudgetExceeded:
        exhausted = True
    return s.best_faces, s.best_rot, s.best_sig, s.nodes, exhausted


def _run(plan: _Plan, budget: int | None, jobs: int, floor: int):
    """Returns (faces, rotation, signature bits, nodes, exhausted)."""
    if jobs <= 1 or len(plan.order) < 2:
        s = _Searcher(plan, budget, floor=floor)
        exhausted = False
        try:
            s.run_prefix([])
        except BudgetExceeded:
            exhausted = True
        return s.best_faces, s.best_rot, s.best_sig, s.nodes, exhausted
    prefixes = [[c0, c1] for c0 in plan.choices[0] for c1 in plan.choices[1]]
    ctx = mp.get_context("fork")
    shared = ctx.Value("i", floor)
    per_task = None if budget is None else max(1, budget // len(prefixes))
    with ctx.Pool(jobs, initializer=_init_worker, initargs=(shared,)) as pool:
        results = pool.map(_worker, [(plan, per_task, p, floor) for p in prefixes])
    # lowest task index among the best keeps the sequential (lex-first) witness
    best = max(range(len(results)), key=lambda i: (results[i][0], -i))
    faces, rot, sig, _, _ = results[best]
    return faces, rot, sig, sum(r[3] for r in results), any(r[4] for r in results)


def _search(g: Graph, orientable: bool, budget: int | None, jobs: int) -> SearchResult:
    plan = _plan(g, orientable)
    stop_faces = _Searcher(plan, None).stop_faces
    seed = None
    floor = -1
    if not orientable:
        seed = _search(g, True, budget, jobs)
        if seed.witness is not None:
            floor = 2 - 2 * seed.value - (g.n - g.m)
        if budget is not None:
            budget = max(1, budget - seed.nodes)
    faces, rot, sig, nodes, exhausted = _run(plan, budget, jobs, floor)
    if seed is not None:
        nodes += seed.nodes
    if faces < floor or faces < 0:
        # budget ran out before matching the orientable seed
        if seed is None or seed.witness is None:
            return SearchResult(-1, None, False, nodes, plan.lower_bound, orientable)
        return SearchResult(2 * seed.value, seed.witness, floor >= stop_faces, nodes, plan.lower_bound, orientable)
    exact = not exhausted or faces >= stop_faces
    sch = EmbeddingScheme(g, tuple(rot), tuple(-1 if b else 1 for b in sig))
    return SearchResult(_value(plan, faces), sch, exact, nodes, plan.lower_bound, orientable)


def min_genus_search(g: Graph, budget: int | None = None, jobs: int = 1) -> SearchResult:
    """Minimum orientable genus over all rotation systems, with a witness."""
    return _search(g, True, budget, jobs)


def min_euler_genus_search(g: Graph, budget: int | None = None, jobs: int = 1) -> SearchResult:
    """Minimum Euler genus over all embedding schemes, with a witness."""
    return _search(g, False, budget, jobs)
