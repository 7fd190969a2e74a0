"""The acceptance suite: eleven end-to-end checks over the library and corpus."""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .certify import (
    Certificate,
    UnrealizableError,
    amalgam_certificate,
    ceil_half,
    check_lemma_k33,
    copy_cycles,
    is_unit_lower_triangular,
    k3t_certificate,
    k3t_pigeonhole,
    wing_cycle_pairs,
)
from .corpus import CATALOG, load_drawing, load_witness, witness_dir
from .crosscap import (
    CrosscapDrawing,
    compress,
    cycle_homology,
    intersection_form,
    is_independently_even,
    normalize_forest,
)
from .embedding import delete_face_vertices, euler_formula_bound, euler_genus_of_scheme, trace_faces
from .facewidth import facewidth_projective, radial_graph, shortest_odd_closed_walk
from .families import amalgam, complete_bipartite_3t, complete_graph, k33, kuratowski_wing
from .gf2 import BitVec, Gf2Matrix, is_tournament, rank, tournament_rank_floor
from .graph import Graph, SpanningForest, fundamental_cycles, spanning_forest
from .parity import deletion_cycle_check, kuratowski_forest_parity, verify_kleitman, xu_deletion_check
from .search import min_euler_genus_search, min_genus_search


class CorpusError(RuntimeError):
    """Witness files are missing or unreadable."""


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self, timing: bool = True) -> str:
        mark = "PASS" if self.passed else "FAIL"
        took = f" ({self.seconds:.1f}s)" if timing else ""
        return f"[{mark}] {self.number:2d} {self.title}{took}: {self.detail}"


class _Ctx:
    def __init__(self, corpus: Path):
        self.corpus = corpus
        self.certificates: list[Certificate] = []

    def scheme(self, name: str):
        try:
            return load_witness(name, self.corpus)
        except FileNotFoundError as exc:
            raise CorpusError(f"missing witness {name}") from exc

    def drawing(self, name: str):
        try:
            return load_drawing(name, self.corpus)
        except FileNotFoundError as exc:
            raise CorpusError(f"missing drawing {name}") from exc


def _c1(ctx):
    cases = [
        ("genus K5", min_genus_search, complete_graph(5), 1),
        ("genus K3,3", min_genus_search, k33(), 1),
        ("genus K4", min_genus_search, complete_graph(4), 0),
        ("genus K3,6", min_genus_search, complete_bipartite_3t(6), 1),
        ("eg K5", min_euler_genus_search, complete_graph(5), 1),
        ("eg K3,3", min_euler_genus_search, k33(), 1),
        ("eg K3,4", min_euler_genus_search, complete_bipartite_3t(4), 1),
    ]
    start = time.perf_counter()
    bad = []
    for label, fn, g, want in cases:
        r = fn(g)
        if not r.exact or r.value != want:
            bad.append(f"{label}={r.value}{'' if r.exact else '?'}")
    elapsed = time.perf_counter() - start
    if elapsed >= 300:
        bad.append(f"took {elapsed:.0f}s")
    return not bad, "; ".join(bad) or "7 values exact"


def _c2(ctx):
    got = {t: euler_formula_bound(complete_bipartite_3t(t)) for t in range(3, 11)}
    bad = [t for t, v in got.items() if v != math.ceil((t - 2) / 2)]
    return not bad, f"mismatch at t={bad}" if bad else "t=3..10 match ceil((t-2)/2)"


def _c3(ctx):
    start = time.perf_counter()
    k5 = verify_kleitman(complete_graph(5))
    kb = verify_kleitman(k33())
    elapsed = time.perf_counter() - start
    ok = k5.passed and kb.passed and k5.reference_counts[0][1] == 5 and elapsed < 1.0
    return ok, f"K5 ref {k5.reference_counts[0][1]}, {k5.moves_checked}+{kb.moves_checked} moves even" + (
        "" if elapsed < 1.0 else f", took {elapsed:.2f}s"
    )


def _c4(ctx):
    bad = []
    for name, g in (("K5", complete_graph(5)), ("K3,3", k33())):
        for u, v in g.edges:
            if not deletion_cycle_check(g, u, v):
                bad.append(f"{name}-{u}-{v}")
    for kind in "fgh":
        h, x, y = kuratowski_wing(kind)
        if not xu_deletion_check(h, x, y):
            bad.append(f"wing {kind}: H-x-u")
        am = amalgam(h, x, y, 2)
        for c in range(am.t):
            g = am.graph
            cyc = copy_cycles(am, c)
            ok = all(am.y not in ce.vertices(g) for ce in cyc["e"].values())
            ok &= all(am.x not in cf.vertices(g) for cf in cyc["f"].values())
            ok &= all(not {am.x, am.y} & cg.vertices(g) for cg in cyc["g"].values())
            if not ok:
                bad.append(f"wing {kind} copy {c}: placement")
    return not bad, ", ".join(bad) or "all deletions are cycles; placements hold for wings f, g, h"


def _all_tournaments(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for upper in range(1 << len(pairs)):
        for diag in range(1 << n):
            rows = [0] * n
            for k, (i, j) in enumerate(pairs):
                if (upper >> k) & 1:
                    rows[i] |= 1 << j
                else:
                    rows[j] |= 1 << i
            for i in range(n):
                if (diag >> i) & 1:
                    rows[i] |= 1 << i
            yield Gf2Matrix(n, n, tuple(rows))


def random_tournament(n: int, rng: random.Random) -> Gf2Matrix:
    rows = [0] * n
    for i in range(n):
        if rng.getrandbits(1):
            rows[i] |= 1 << i
        for j in range(i + 1, n):
            if rng.getrandbits(1):
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Gf2Matrix(n, n, tuple(rows))


def _c5(ctx):
    start = time.perf_counter()
    bad = []
    mins = {}
    for n in range(1, 6):
        mins[n] = min(rank(a) for a in _all_tournaments(n))
        if mins[n] != tournament_rank_floor(n):
            bad.append(f"n={n}: min {mins[n]} vs floor {tournament_rank_floor(n)}")
    rng = random.Random(51)
    low = min(rank(random_tournament(51, rng)) for _ in range(1000))
    if low < 25:
        bad.append(f"random 51x51 rank {low}")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        bad.append(f"took {elapsed:.0f}s")
    return not bad, "; ".join(bad) or f"minima {mins}, random 51x51 min rank {low}"


def _c6(ctx):
    bad = []
    for name, w in CATALOG.items():
        try:
            s = ctx.scheme(name)
            eg = euler_genus_of_scheme(s)
        except CorpusError:
            raise
        except ValueError as exc:
            bad.append(f"{name}: {exc}")
            continue
        if eg != w.euler_genus or s.is_orientable() != w.orientable:
            bad.append(f"{name}: eg {eg}, expected {w.euler_genus}")
    return not bad, "; ".join(bad) or f"{len(CATALOG)} witnesses match"


def _c7(ctx):
    bad = []
    for t in range(3, 7):
        for name in (f"pgrid-{t}", f"pwall-{t}"):
            s = ctx.scheme(name)
            try:
                fw = facewidth_projective(s)
            except ValueError as exc:
                bad.append(f"{name}: {exc}")
                continue
            if fw != t:
                bad.append(f"{name}: fw {fw}")
            for k in range(len(trace_faces(s))):
                s2, _ = delete_face_vertices(s, k)
                length = shortest_odd_closed_walk(radial_graph(s2))
                if length is None or length // 2 < t - 2:
                    bad.append(f"{name} face {k}: fw {None if length is None else length // 2}")
                    break
    return not bad, "; ".join(bad) or "fw = t on grids and walls t=3..6; every face deletion keeps fw >= t-2"


def _c8(ctx):
    bad = []
    for t, name in ((4, "k34-projective"), (5, "k35-torus"), (6, "k36-torus")):
        d = ctx.drawing(name)
        sums = {check_lemma_k33(d, i, j).sum for i in range(1, t) for j in range(1, t) if i != j}
        try:
            cert = k3t_certificate(d)
        except (ValueError, UnrealizableError) as exc:
            bad.append(f"{name}: {exc}")
            continue
        ctx.certificates.append(cert)
        want = math.ceil((t - 2) / 2)
        if sums != {1} or not is_tournament(cert.matrix) or cert.rank != want or cert.eg_bound != want:
            bad.append(f"{name}: sums {sums}, rank {cert.rank}")
    return not bad, "; ".join(bad) or "K3,4/K3,5/K3,6: lemma sums 1, tournament, rank = ceil((t-2)/2)"


def _c9(ctx):
    bad = []
    for t in (2, 3):
        name = f"amalg-k33-{t}"
        d = ctx.drawing(name)
        am = amalgam(k33(), 0, 1, t)
        try:
            pairs = [wing_cycle_pairs(d, am, c) for c in range(t)]
            cert = amalgam_certificate(d, am)
        except (ValueError, UnrealizableError) as exc:
            bad.append(f"{name}: {exc}")
            continue
        ctx.certificates.append(cert)
        if not all(intersection_form(d, p.c1, p.c2) == 1 for p in pairs):
            bad.append(f"{name}: pair form")
        if not is_unit_lower_triangular(cert.matrix) or cert.rank != t:
            bad.append(f"{name}: matrix {cert.matrix.row_strings()}")
        if cert.eg_bound != t or cert.g_bound != ceil_half(t):
            bad.append(f"{name}: bounds {cert.eg_bound}/{cert.g_bound}")
    return not bad, "; ".join(bad) or "t=2,3: unit lower triangular, rank t, bounds t and ceil(t/2)"


def _c10(ctx):
    bad = []
    g = k33()
    z = CrosscapDrawing.zero(g, 2)
    if kuratowski_forest_parity(z, spanning_forest(g)).passed:
        bad.append("zero K3,3 not flagged")
    am = amalgam(k33(), 0, 1, 2)
    try:
        wing_cycle_pairs(CrosscapDrawing.zero(am.graph, 2), am, 0)
        bad.append("zero amalgam not flagged")
    except UnrealizableError:
        pass
    rng = random.Random(10)
    fired = 0
    for h in (0, 1, 2):
        threshold = 2 * 4**h + 2
        for t in range(threshold, threshold + 3):
            kg = complete_bipartite_3t(t)
            for _ in range(5):
                d = CrosscapDrawing(kg, h, tuple(BitVec(h, rng.getrandbits(h) if h else 0) for _ in range(kg.m)))
                rep = k3t_pigeonhole(d)
                if rep.contradiction:
                    fired += 1
                else:
                    bad.append(f"pigeonhole silent at h={h}, t={t}")
    return not bad, "; ".join(bad[:5]) or f"zero data flagged; pigeonhole fired on all {fired} data past the threshold"


def random_datum(rng: random.Random) -> tuple[CrosscapDrawing, SpanningForest]:
    n = rng.randint(3, 9)
    pairs = list(itertools.combinations(range(n), 2))
    m = rng.randint(n - 1, len(pairs))
    edges = rng.sample(pairs, m)
    g = Graph.from_edges(n, edges)
    h = rng.randint(0, 6)
    d = CrosscapDrawing(g, h, tuple(BitVec(h, rng.getrandbits(h) if h else 0) for _ in range(g.m)))
    roots = [rng.randrange(n)]
    return d, spanning_forest(g, roots)


def _c11(ctx):
    rng = random.Random(11)
    bad = 0
    for _ in range(1000):
        d, forest = random_datum(rng)
        d2 = normalize_forest(d, forest)
        fc = list(fundamental_cycles(d.graph, forest).values())
        if any(not d2.y[e].is_zero() for e in forest.tree_edges):
            bad += 1
            continue
        if any(cycle_homology(d, c) != cycle_homology(d2, c) for c in fc):
            bad += 1
            continue
        d3 = compress(d)
        if any(intersection_form(d, a, b) != intersection_form(d3, a, b) for a in fc for b in fc):
            bad += 1
    coupling = all(c.g_bound == ceil_half(c.eg_bound) and c.eg_bound <= 2 * c.g_bound for c in ctx.certificates)
    detail = f"{1000 - bad}/1000 random data preserved; eg <= 2g coupling on {len(ctx.certificates)} certificates"
    return bad == 0 and coupling and bool(ctx.certificates), detail


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "exact genus by search", _c1),
    (2, "Euler-formula bound for K3,t", _c2),
    (3, "Kleitman parity", _c3),
    (4, "deletion and placement observations", _c4),
    (5, "tournament rank floor", _c5),
    (6, "witness genus values", _c6),
    (7, "projective facewidth", _c7),
    (8, "K3,t certificate pipeline", _c8),
    (9, "amalgamation certificate pipeline", _c9),
    (10, "negative controls", _c10),
    (11, "invariant suite", _c11),
]


def check_corpus(corpus: Path):
    corpus = Path(corpus)
    if not corpus.is_dir():
        raise CorpusError(f"{corpus} is not a directory")
    missing = [n for n in CATALOG if not (corpus / f"{n}.scheme").is_file()]
    if missing:
        raise CorpusError(f"missing witnesses: {', '.join(missing)}")


def run_criterion(number: int, corpus: Path | None = None, ctx: _Ctx | None = None) -> CriterionResult:
    ctx = ctx or _Ctx(Path(corpus) if corpus else witness_dir())
    _, title, fn = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        ok, detail = fn(ctx)
    except CorpusError:
        raise
    except Exception as exc:  # a crash is a failed criterion, reported by name
        ok, detail = False, f"error: {type(exc).__name__}: {exc}"
    return CriterionResult(number, title, ok, detail, time.perf_counter() - start)


def run_all(corpus: Path | None = None) -> list[CriterionResult]:
    """Run every criterion in order; certificates from 8 and 9 feed 11."""
    corpus = Path(corpus) if corpus else witness_dir()
    check_corpus(corpus)
    ctx = _Ctx(corpus)
    return [run_criterion(n, ctx=ctx) for n, _, _ in CRITERIA]
