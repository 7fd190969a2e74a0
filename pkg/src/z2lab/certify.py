"""Lower-bound certificates for the Euler Z2-genus.

Every certificate is about the datum it was built from: a matrix of
intersection-form values between cycles of the drawing. The form of a
surface of Euler genus g has rank at most g, so ``rank`` of any such matrix
bounds the Euler genus of the datum's surface from below; the orientable
bound follows from eg <= 2g.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import networkx as nx

from .crosscap import CrosscapDrawing, DrawingError, cycle_homology, intersection_form, is_independently_even, normalize_forest
from .families import Amalgam, complete_bipartite_3t, k3t_cycles
from .gf2 import BitVec, Gf2Matrix, dot, is_tournament, rank
from .graph import CycleVec, Graph, GraphError, SpanningForest, fundamental_cycle
from .parity import ForestParityReport, kuratowski_forest_parity, kuratowski_type, xu_deletion_check
from .search import BudgetExceeded, min_genus_search


class UnrealizableError(ValueError):
    """The datum violates a necessary condition for independently even drawings."""


class HypothesisError(ValueError):
    pass


def ceil_half(n: int) -> int:
    return -(-n // 2)


@dataclass(frozen=True)
class Certificate:
    graph: str
    mechanism: str  # k3t-rank | k3t-pigeonhole | amalgam-rank
    matrix: Gf2Matrix
    rank: int
    eg_bound: int
    g_bound: int
    diagnostics: tuple[str, ...] = ()

    def __post_init__(self):
        if self.g_bound != ceil_half(self.eg_bound):
            raise ValueError("orientable bound must be ceil(eg bound / 2)")

    def machine(self) -> dict:
        return {
            "graph": self.graph,
            "mechanism": self.mechanism,
            "matrix": self.matrix.row_strings(),
            "rank": self.rank,
            "eg_bound": self.eg_bound,
            "g_bound": self.g_bound,
        }

    def to_text(self) -> str:
        lines = [
            f"certificate for {self.graph}",
            f"mechanism: {self.mechanism}",
            f"matrix ({self.matrix.rows}x{self.matrix.cols}):",
        ]
        lines.extend("  " + r for r in self.matrix.row_strings())
        lines += [
            f"rank: {self.rank}",
            f"euler z2-genus >= {self.eg_bound}",
            f"z2-genus >= {self.g_bound}",
        ]
        lines.extend(f"note: {d}" for d in self.diagnostics)
        lines.append("--- machine ---")
        lines.append(json.dumps(self.machine(), sort_keys=True))
        return "\n".join(lines) + "\n"


def _rank_certificate(name: str, mechanism: str, a: Gf2Matrix, notes=()) -> Certificate:
    r = rank(a)
    return Certificate(name, mechanism, a, r, r, ceil_half(r), tuple(notes))


# ---------------------------------------------------------------------------
# K_{3,t}


def k3t_size(g: Graph) -> int:
    """t such that ``g`` is the generated K_{3,t} (same vertex and edge ids)."""
    t = g.n - 3
    if t < 1 or g.edges != complete_bipartite_3t(t).edges:
        raise GraphError("graph is not the generated K_{3,t}")
    return t


@dataclass(frozen=True)
class LemmaK33Report:
    i: int
    j: int
    sum: int

    @property
    def passed(self) -> bool:
        return self.sum == 1


def check_lemma_k33(d: CrosscapDrawing, i: int, j: int) -> LemmaK33Report:
    """Omega(C_i, C'_j) + Omega(C'_i, C_j) for the K3,3 on a, b, c, u_0, u_i, u_j."""
    t = k3t_size(d.graph)
    if not (1 <= i < t and 1 <= j < t and i != j):
        raise ValueError(f"need distinct indices in 1..{t - 1}")
    cs, cps = k3t_cycles(t)
    s = intersection_form(d, cs[i], cps[j]) ^ intersection_form(d, cps[i], cs[j])
    return LemmaK33Report(i, j, s)


def k3t_matrix(d: CrosscapDrawing) -> Gf2Matrix:
    t = k3t_size(d.graph)
    cs, cps = k3t_cycles(t)
    hc = {i: cycle_homology(d, c) for i, c in cs.items()}
    hp = {i: cycle_homology(d, c) for i, c in cps.items()}
    return Gf2Matrix.from_function(t - 1, t - 1, lambda a, b: dot(hc[a + 1], hp[b + 1]))


def k3t_certificate(d: CrosscapDrawing) -> Certificate:
    t = k3t_size(d.graph)
    if t < 3:
        raise GraphError("the rank certificate needs t >= 3")
    if not is_independently_even(d):
        raise DrawingError("datum is not independently even")
    a = k3t_matrix(d)
    if not is_tournament(a):
        bad = [(i + 1, j + 1) for i, j in itertools.combinations(range(t - 1), 2) if a[i, j] == a[j, i]]
        raise UnrealizableError(f"matrix is not a tournament; lemma K3,3 fails for index pairs {bad[:5]}")
    return _rank_certificate(d.graph.name or f"K3,{t}", "k3t-rank", a)


@dataclass(frozen=True)
class PigeonholeReport:
    t: int
    h: int
    groups: tuple[tuple[int, ...], ...]  # indices sharing both classes
    triple: tuple[int, int, int] | None

    @property
    def contradiction(self) -> bool:
        return self.triple is not None

    @property
    def guaranteed(self) -> bool:
        """Pigeonhole forces a triple once t >= 2 * 4^h + 2."""
        return self.t >= 2 * 4**self.h + 2

    def to_text(self) -> str:
        lines = [f"K3,{self.t} with h = {self.h}: {len(self.groups)} class groups"]
        if self.triple:
            i, j, k = self.triple
            lines.append(
                f"indices {i}, {j}, {k} share classes: the K3,3 on a, b, c, u{i}, u{j}, u{k} "
                "has only zero-class cycles, contradicting lemma K3,3"
            )
            lines.append(f"so h must exceed log_4((t - 1) / 2) = log_4({(self.t - 1) / 2:g})")
        else:
            lines.append("no trivial triple")
        return "\n".join(lines) + "\n"


def trivial_k33_cycles(t: int, triple: tuple[int, int, int]) -> list[CycleVec]:
    """Generators a u_i b u_j, a u_i c u_j of the K3,3 on a triple of indices."""
    cs, cps = k3t_cycles(t)
    i, j, k = triple
    return [cs[i] ^ cs[j], cs[j] ^ cs[k], cps[i] ^ cps[j], cps[j] ^ cps[k]]


def k3t_pigeonhole(d: CrosscapDrawing) -> PigeonholeReport:
    t = k3t_size(d.graph)
    if not is_independently_even(d):
        raise DrawingError("datum is not independently even")
    groups: dict[tuple[int, int], list[int]] = {}
    if t >= 2:
        cs, cps = k3t_cycles(t)
        for i in range(1, t):
            key = (cycle_homology(d, cs[i]).bits, cycle_homology(d, cps[i]).bits)
            groups.setdefault(key, []).append(i)
    ordered = sorted((tuple(v) for v in groups.values()), key=lambda g: g[0])
    triple = next((g[:3] for g in ordered if len(g) >= 3), None)
    return PigeonholeReport(t, d.h, tuple(ordered), triple)


# ---------------------------------------------------------------------------
# xy-wings and amalgamations


def is_xy_wing(h: Graph, x: int, y: int, budget: int | None = 1_000_000) -> bool:
    h.check_vertex(x, y)
    if x == y or h.has_edge(x, y):
        return False
    if h.n < 3 or not nx.is_biconnected(h.to_networkx()):
        return False
    if not h.is_connected(removed=(x, y)):
        return False
    res = min_genus_search(h.add_edge(x, y), budget=budget)
    if not res.exact:
        raise BudgetExceeded("planarity check ran out of budget")
    return res.value > 0


@dataclass(frozen=True)
class WingPair:
    copy: int
    case: int  # 2: C1 in H-x, C2 in H-y;  1: C2 in H-x-y
    c1: CycleVec
    c2: CycleVec
    edges: tuple[int, int]  # wing edge ids (e, f) for case 2, (h, g) for case 1
    partner: int | None  # copy whose x-y path closes C_h in case 1
    c1_avoids_x: bool
    c2_avoids_y: bool
    c2_avoids_xy: bool

    @property
    def placement(self) -> str:
        return "split" if self.case == 2 else "inner"

    @property
    def placement_ok(self) -> bool:
        if self.case == 2:
            return self.c1_avoids_x and self.c2_avoids_y
        return self.c2_avoids_xy


def _check_wing(am: Amalgam):
    w = am.wing
    if not xu_deletion_check(w.graph, w.x, w.y) or not is_xy_wing(w.graph, w.x, w.y):
        raise GraphError("H is not a Kuratowski xy-wing")


def _copy_forest(am: Amalgam, copy: int, with_h: bool) -> SpanningForest:
    edges = am.forest_edges(copy)
    if with_h:
        edges = edges | {am.edge(copy, am.wing.h_edge)}
    return SpanningForest.from_edges(am.graph, edges)


def copy_cycles(am: Amalgam, copy: int) -> dict[str, dict[int, CycleVec]]:
    """Fundamental cycles inside one copy: C_e (tree F), C_f + C_h (tree F + h), C_g (tree F)."""
    g = am.graph
    f_plain = _copy_forest(am, copy, False)
    f_h = _copy_forest(am, copy, True)
    w = am.wing
    return {
        "e": {e: fundamental_cycle(g, f_plain, am.edge(copy, e)) for e in w.e_edges},
        "f": {e: fundamental_cycle(g, f_h, am.edge(copy, e)) for e in w.f_edges},
        "g": {e: fundamental_cycle(g, f_plain, am.edge(copy, e)) for e in w.g_edges},
    }


def h_cycle(am: Amalgam, copy: int, partner: int) -> CycleVec:
    """C_h of a copy: its x-y path closed up by the partner copy's x-y path."""
    if copy == partner:
        raise ValueError("partner must be a different copy")
    return CycleVec(am.xy_path_mask(copy) ^ am.xy_path_mask(partner))


def _flags(am: Amalgam, case: int, copy: int, c1: CycleVec, c2: CycleVec, edges, partner) -> WingPair:
    g = am.graph
    v1, v2 = c1.vertices(g), c2.vertices(g)
    return WingPair(
        copy, case, c1, c2, edges, partner,
        am.x not in v1, am.y not in v2, am.x not in v2 and am.y not in v2,
    )


def _split_pair(d: CrosscapDrawing, am: Amalgam, copy: int) -> WingPair | None:
    cyc = copy_cycles(am, copy)
    for e, ce in cyc["e"].items():
        he = cycle_homology(d, ce)
        for f, cf in cyc["f"].items():
            if dot(he, cycle_homology(d, cf)):
                return _flags(am, 2, copy, cf, ce, (e, f), None)
    return None


def _inner_pair(d: CrosscapDrawing, am: Amalgam, copy: int, partner: int) -> WingPair | None:
    cyc = copy_cycles(am, copy)
    ch = h_cycle(am, copy, partner)
    hh = cycle_homology(d, ch)
    for gid, cg in cyc["g"].items():
        if dot(hh, cycle_homology(d, cg)):
            return _flags(am, 1, copy, ch, cg, (am.wing.h_edge, gid), partner)
    return None


def _prepare(d: CrosscapDrawing, am: Amalgam):
    if (d.graph.n, d.graph.edges) != (am.graph.n, am.graph.edges):
        raise GraphError("drawing and amalgam have different graphs")
    if not is_independently_even(d):
        raise DrawingError("datum is not independently even")
    _check_wing(am)


def wing_cycle_pairs(d: CrosscapDrawing, am: Amalgam, copy: int, partner: int | None = None) -> WingPair:
    """Two cycles of one copy with intersection form 1.

    The split placement (C1 = C_f + C_h avoiding x, C2 = C_e avoiding y) is
    tried first, then the inner one (C1 = C_h, C2 = C_g avoiding x and y).
    Within a placement the lexicographically first edge pair wins. Raises
    ``UnrealizableError`` if neither exists.
    """
    _prepare(d, am)
    if not 0 <= copy < am.t:
        raise ValueError(f"copy index must be in 0..{am.t - 1}")
    pair = _split_pair(d, am, copy)
    if pair is not None:
        return pair
    if am.t >= 2:
        if partner is None:
            partner = 0 if copy != 0 else 1
        pair = _inner_pair(d, am, copy, partner)
        if pair is not None:
            return pair
    raise UnrealizableError(f"copy {copy} has no pair of cycles with odd intersection (Kleitman parity fails)")


def amalgam_certificate(d: CrosscapDrawing, am: Amalgam) -> Certificate:
    """Triangular rank certificate for the 2-amalgamation of t copies.

    Copies with a split pair come first (stable by index), then the inner
    ones; inner pairs close C_h with the first split copy's path when there
    is one. ``A[r][c] = Omega(C1 of row copy, C2 of column copy)`` has a
    unit diagonal and, whenever the two cycles are vertex-disjoint, a zero
    above it. A nonzero entry on a disjoint pair is reported as
    unrealizable; any other departure from the triangular shape is noted,
    and the bound is rank(A) either way.
    """
    _prepare(d, am)
    pairs: dict[int, WingPair] = {}
    for c in range(am.t):
        p = _split_pair(d, am, c)
        if p is not None:
            pairs[c] = p
    split = sorted(pairs)
    for c in range(am.t):
        if c in pairs:
            continue
        if am.t < 2:
            raise UnrealizableError(f"copy {c} has no split pair and no partner copy")
        partner = split[0] if split else (0 if c != 0 else 1)
        p = _inner_pair(d, am, c, partner)
        if p is None:
            raise UnrealizableError(f"copy {c} has no pair of cycles with odd intersection (Kleitman parity fails)")
        pairs[c] = p
    order = split + [c for c in range(am.t) if c not in split]
    homs1 = [cycle_homology(d, pairs[c].c1) for c in order]
    homs2 = [cycle_homology(d, pairs[c].c2) for c in order]
    a = Gf2Matrix.from_function(am.t, am.t, lambda r, c: dot(homs1[r], homs2[c]))
    notes = [f"copy order {order}, placements {[pairs[c].placement for c in order]}"]
    g = am.graph
    for r in range(am.t):
        if a[r, r] != 1:
            raise UnrealizableError(f"diagonal entry {r} is 0")
        for c in range(r + 1, am.t):
            if a[r, c]:
                disjoint = not (pairs[order[r]].c1.vertices(g) & pairs[order[c]].c2.vertices(g))
                if disjoint:
                    raise UnrealizableError(
                        f"vertex-disjoint cycles of copies {order[r]} and {order[c]} have odd intersection"
                    )
                notes.append(f"entry ({r},{c}) is 1 on cycles that share vertices; bound uses rank")
    name = g.name or f"amalgam-{am.t}"
    return _rank_certificate(name, "amalgam-rank", a, notes)


def is_unit_lower_triangular(a: Gf2Matrix) -> bool:
    return a.is_square() and all(a[i, i] == 1 for i in range(a.rows)) and all(
        a[i, j] == 0 for i in range(a.rows) for j in range(i + 1, a.cols)
    )


# ---------------------------------------------------------------------------
# two copies with equal classes


@dataclass(frozen=True)
class OrthogonalityReport:
    copies: tuple[int, int]
    families: dict = field(default_factory=dict)  # name -> list of (edge pair, same-copy value, cross-copy value)
    forest_parity: ForestParityReport | None = None

    @property
    def all_zero(self) -> bool:
        return all(a == 0 and b == 0 for rows in self.families.values() for _, a, b in rows)

    @property
    def disjoint_violations(self) -> list:
        return [(name, k) for name, rows in self.families.items() for k, _, b in rows if b]

    @property
    def contradiction(self) -> bool:
        """Orthogonal families force an even forest count, which no drawing allows."""
        return self.all_zero and self.forest_parity is not None and not self.forest_parity.passed

    def to_text(self) -> str:
        i, j = self.copies
        lines = [f"copies {i} and {j} have equal classes"]
        for name, rows in self.families.items():
            nz = sum(1 for _, a, b in rows if a or b)
            lines.append(f"{name}: {len(rows)} pairs, {nz} nonzero")
        if self.disjoint_violations:
            lines.append("vertex-disjoint cycles with odd intersection: datum not realizable")
        if self.forest_parity is not None:
            lines.append(f"H^({i},{j}) forest parity: {self.forest_parity.count} ({self.forest_parity.verdict})")
        lines.append(f"contradiction reproduced: {'yes' if self.contradiction else 'no'}")
        return "\n".join(lines) + "\n"


def path_contracted_datum(d: CrosscapDrawing, am: Amalgam, copy: int, path_copy: int):
    """Datum on H + xy: copy ``copy`` of H, with xy standing in for the x-y path
    of ``path_copy``. Normalized on F + xy, which spans H + xy.

    Returns ``(datum, forest edges F, Kuratowski edge set)``; the Kuratowski
    subgraph is H itself when H is K3,3 and H + xy otherwise.
    """
    w = am.wing
    hp = w.graph.add_edge(w.x, w.y)
    xy = hp.edge_id(w.x, w.y)
    y = []
    for e in range(hp.m):
        if e == xy:
            bits = 0
            for pe in CycleVec(am.xy_path_mask(path_copy)).edge_ids:
                bits ^= d.y[pe].bits
            y.append(BitVec(d.h, bits))
        else:
            u, v = hp.edges[e]
            y.append(d.y[am.edge(copy, w.graph.edge_id(u, v))])
    raw = CrosscapDrawing(hp, d.h, tuple(y))
    forest = SpanningForest.from_edges(hp, set(w.tree) | {xy})
    norm = normalize_forest(raw, forest)
    k_edges = [e for e in range(hp.m) if e != xy] if kuratowski_type(w.graph) else list(range(hp.m))
    return norm, set(w.tree) | {xy}, k_edges


def orthogonality_check(d: CrosscapDrawing, am: Amalgam, i: int, i2: int) -> OrthogonalityReport:
    """Substitute disjoint representatives from an equal-class copy.

    Requires copies ``i`` and ``i2`` to have the same class on every
    fundamental cycle of a copy and on the x-y path loop. Each of the four
    families pairs a cycle of copy ``i`` with one of copy ``i`` (same-copy
    value) and with the matching cycle of copy ``i2`` (cross-copy value,
    vertex-disjoint, hence 0 in any independently even drawing).
    """
    _prepare(d, am)
    if i == i2 or not (0 <= i < am.t and 0 <= i2 < am.t):
        raise ValueError("need two distinct copy indices")
    ca, cb = copy_cycles(am, i), copy_cycles(am, i2)
    for kind in ("e", "f", "g"):
        for e in ca[kind]:
            if cycle_homology(d, ca[kind][e]) != cycle_homology(d, cb[kind][e]):
                raise HypothesisError(f"copies {i} and {i2} differ on the class of edge {e} ({kind})")
    if not cycle_homology(d, h_cycle(am, i, i2)).is_zero():
        raise HypothesisError(f"copies {i} and {i2} differ on the class of C_h")
    hom = lambda c: cycle_homology(d, c)

    def fam(left: dict, right_same: dict, right_other: dict):
        rows = []
        for a, ca_ in left.items():
            for b in right_same:
                rows.append(((a, b), dot(hom(ca_), hom(right_same[b])), dot(hom(ca_), hom(right_other[b]))))
        return rows

    families = {
        "e vs f+h": fam(ca["e"], ca["f"], cb["f"]),
        "f+h vs g": fam(ca["f"], ca["g"], cb["g"]),
        "e vs g": fam(ca["e"], ca["g"], cb["g"]),
        "g vs g": fam(ca["g"], ca["g"], cb["g"]),
    }
    datum, forest, k_edges = path_contracted_datum(d, am, i, i2)
    fp = kuratowski_forest_parity(datum, forest, k_edges)
    return OrthogonalityReport((i, i2), families, fp)


# ---------------------------------------------------------------------------


def ramsey_potential(k_prime: int, i: int, k: int, w_cal: int) -> int:
    """i (i - 2k') (w + 2k), with ``w_cal`` standing in for the wall-width constant."""
    if not (0 <= 2 * k_prime < i <= k):
        raise ValueError("need 0 <= 2k' < i <= k")
    if w_cal < 0:
        raise ValueError("w_cal must be nonnegative")
    return i * (i - 2 * k_prime) * (w_cal + 2 * k)
