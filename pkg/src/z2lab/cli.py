"""Command-line front end.

Exit codes: 0 success, 1 verified failure (failed check, unrealizable datum),
2 usage, input or parse error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .acceptance import CorpusError, run_all
from .certify import (
    HypothesisError,
    UnrealizableError,
    amalgam_certificate,
    k3t_certificate,
    k3t_pigeonhole,
    k3t_size,
    ramsey_potential,
)
from .corpus import CATALOG, witness_dir, write_corpus
from .crosscap import (
    CrosscapDrawing,
    DrawingError,
    drawing_from_text,
    drawing_to_text,
    is_independently_even,
    scheme_to_drawing,
    span_dimension,
)
from .embedding import (
    EmbeddingScheme,
    SchemeError,
    euler_formula_bound,
    euler_genus_of_scheme,
    genus_formula_bound,
    scheme_from_text,
    scheme_to_text,
    surface_name,
    trace_faces,
)
from .facewidth import facewidth_projective
from .families import (
    KURATOWSKI_KINDS,
    amalgam,
    complete_bipartite_3t,
    complete_graph,
    gen_kuratowski,
    gen_projective_grid,
    gen_projective_wall,
    k33,
    kuratowski_wing,
)
from .graph import Graph, GraphError
from .parity import verify_kleitman
from .search import min_euler_genus_search, min_genus_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    code: int
    text: str
    payload: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# input helpers


def _read(arg: str, suffix: str) -> str:
    """Contents of a file, or of the shipped witness with that name."""
    p = Path(arg)
    if p.is_file():
        return p.read_text()
    w = witness_dir() / f"{arg}{suffix}"
    if arg in CATALOG and w.is_file():
        return w.read_text()
    raise UsageError(f"no such file or witness: {arg}")


def _graph(arg: str) -> Graph:
    return Graph.from_text(_read(arg, ".scheme"))


def _scheme(arg: str) -> EmbeddingScheme:
    return scheme_from_text(_read(arg, ".scheme"))


def _drawing(arg: str) -> CrosscapDrawing:
    return drawing_from_text(_read(arg, ".drawing"))


def _search_result(res, kind: str, out: str | None) -> CommandResult:
    payload = {kind: res.value, "exact": res.exact, "nodes": res.nodes, "lower_bound": res.lower_bound}
    if out and res.witness is not None:
        Path(out).write_text(scheme_to_text(res.witness))
    if res.exact:
        return CommandResult(EXIT_OK, f"{kind} = {res.value}\n", payload)
    found = f"{kind} <= {res.value}" if res.witness is not None else "no embedding found"
    text = f"{found} (budget exhausted after {res.nodes} nodes; lower bound {res.lower_bound})\n"
    return CommandResult(EXIT_BUDGET, text, payload)


# ---------------------------------------------------------------------------
# commands


def cmd_gen(a) -> CommandResult:
    fam = a.family
    if fam == "kuratowski":
        if a.kind is None:
            raise UsageError("gen kuratowski needs --kind")
        g = gen_kuratowski(a.kind, a.t)
    elif fam == "complete":
        g = complete_graph(a.n)
        g = Graph(g.n, g.edges, g.labels, f"K{a.n}")
    elif fam == "k3t":
        g = complete_bipartite_3t(a.t)
    elif fam == "grid":
        g = gen_projective_grid(a.t, a.s or a.t)
    else:
        g = gen_projective_wall(a.t)
    text = g.to_text()
    payload = {"name": g.name, "vertices": g.n, "edges": g.m}
    if a.output:
        Path(a.output).write_text(text)
        return CommandResult(EXIT_OK, f"wrote {a.output}: {g.n} vertices, {g.m} edges\n", payload)
    return CommandResult(EXIT_OK, text, payload)


def cmd_genus(a) -> CommandResult:
    res = min_genus_search(_graph(a.input), budget=a.budget, jobs=a.jobs)
    return _search_result(res, "genus", a.witness)


def cmd_euler_genus(a) -> CommandResult:
    res = min_euler_genus_search(_graph(a.input), budget=a.budget, jobs=a.jobs)
    return _search_result(res, "euler genus", a.witness)


def cmd_faces(a) -> CommandResult:
    s = _scheme(a.input)
    faces = trace_faces(s)
    eg = euler_genus_of_scheme(s)
    lines = [f"faces = {len(faces)}", f"euler genus = {eg}", f"surface = {surface_name(s)}"]
    walks = []
    for k, f in enumerate(faces):
        edges = [flag // 4 for flag in f.flags]
        walks.append(edges)
        if a.verbose:
            lines.append(f"face {k}: edges {' '.join(map(str, edges))}")
    payload = {"faces": len(faces), "euler_genus": eg, "orientable": s.is_orientable(), "face_edges": walks}
    return CommandResult(EXIT_OK, "\n".join(lines) + "\n", payload)


def cmd_facewidth(a) -> CommandResult:
    fw = facewidth_projective(_scheme(a.input))
    return CommandResult(EXIT_OK, f"facewidth = {fw}\n", {"facewidth": fw})


def cmd_bound(a) -> CommandResult:
    g = _graph(a.input)
    eb, gb = euler_formula_bound(g), genus_formula_bound(g)
    text = f"euler genus >= {eb}\ngenus >= {gb}\n"
    return CommandResult(EXIT_OK, text, {"euler_genus_bound": eb, "genus_bound": gb})


def cmd_verify_kleitman(a) -> CommandResult:
    named = {"k5": complete_graph, "k33": lambda _: k33()}
    key = a.input.lower()
    g = named[key](5) if key in named else _graph(a.input)
    rep = verify_kleitman(g, random_orders=a.orders, seed=a.seed)
    payload = {
        "graph": rep.graph,
        "covered": rep.covered,
        "passed": rep.passed,
        "reference_counts": [c for _, c in rep.reference_counts],
        "moves_checked": rep.moves_checked,
        "odd_moves": len(rep.odd_moves),
    }
    return CommandResult(EXIT_OK if rep.passed else EXIT_FAIL, rep.to_text(), payload)


def cmd_validate_drawing(a) -> CommandResult:
    d = _drawing(a.drawing)
    lines = [f"graph: {d.graph.name or 'unnamed'} ({d.graph.n} vertices, {d.graph.m} edges)", f"h = {d.h}"]
    even = is_independently_even(d)
    dim = span_dimension(d)
    lines.append(f"span dimension = {dim}")
    lines.append(f"independently even: {'yes' if even else 'no'}")
    ok = even
    if a.scheme:
        s = _scheme(a.scheme)
        same = s.graph.n == d.graph.n and s.graph.edges == d.graph.edges
        derived = scheme_to_drawing(s) if same else None
        match = derived is not None and derived.h == d.h and derived.y == d.y and derived.x == d.x
        lines.append(f"matches scheme: {'yes' if match else 'no'}")
        ok = ok and match
    lines.append(f"result: {'PASS' if ok else 'FAIL'}")
    payload = {"h": d.h, "span_dimension": dim, "independently_even": even, "passed": ok}
    return CommandResult(EXIT_OK if ok else EXIT_FAIL, "\n".join(lines) + "\n", payload)


def _not_even(d: CrosscapDrawing) -> CommandResult | None:
    if is_independently_even(d):
        return None
    return CommandResult(EXIT_FAIL, "datum is not independently even\n", {"independently_even": False})


def cmd_certify_k3t(a) -> CommandResult:
    d = _drawing(a.drawing)
    k3t_size(d.graph)
    if bad := _not_even(d):
        return bad
    cert = k3t_certificate(d)
    text = cert.to_text()
    pig = k3t_pigeonhole(d)
    text = pig.to_text() + text
    payload = cert.machine() | {"pigeonhole_triple": pig.triple}
    return CommandResult(EXIT_OK, text, payload)


def identify_amalgam(g: Graph, max_t: int = 256):
    """(kind, t) when ``g`` is a generated Kuratowski graph of type f, g or h."""
    for kind in "fgh":
        h, _, _ = kuratowski_wing(kind)
        per = h.n - 2
        t, rem = divmod(g.n - 2, per)
        if rem or not 1 <= t <= max_t:
            continue
        if gen_kuratowski(kind, t).edges == g.edges:
            return kind, t
    raise UsageError("graph is not a generated Kuratowski graph of type f, g or h")


def cmd_certify_amalgam(a) -> CommandResult:
    d = _drawing(a.drawing)
    if a.graph:
        g = _graph(a.graph)
        if g.n != d.graph.n or g.edges != d.graph.edges:
            raise UsageError("drawing is not a drawing of the given graph")
    kind, t = identify_amalgam(d.graph)
    if bad := _not_even(d):
        return bad
    h, x, y = kuratowski_wing(kind)
    am = amalgam(h, x, y, t)
    notes = []
    if kind in "fg":
        # the generated graph carries the edge xy; certify the amalgamation without it
        xy = d.graph.edge_id(0, 1)
        d, _ = d.restrict(e for e in range(d.graph.m) if e != xy)
        notes.append("bound certified on the graph minus xy, hence holds for the graph")
    cert = amalgam_certificate(d, am)
    head = f"kuratowski type {kind}, t = {t}\n" + "".join(f"note: {n}\n" for n in notes)
    tail = f"eg0 >= {cert.eg_bound}, g0 >= {cert.g_bound}\n"
    return CommandResult(EXIT_OK, head + cert.to_text() + tail, cert.machine() | {"kind": kind, "t": t})


def cmd_certify(a) -> CommandResult:
    return cmd_certify_k3t(a) if a.target == "k3t" else cmd_certify_amalgam(a)


def cmd_potential(a) -> CommandResult:
    v = ramsey_potential(a.k_prime, a.i, a.k, a.w_cal)
    return CommandResult(EXIT_OK, f"potential = {v}\n", {"potential": v})


def cmd_verify_all(a) -> CommandResult:
    corpus = Path(a.corpus) if a.corpus else witness_dir()
    results = run_all(corpus)
    lines = [r.line(timing=a.timing) for r in results]
    failed = [r.number for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    payload = {"criteria": [{"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail} for r in results]}
    return CommandResult(EXIT_FAIL if failed else EXIT_OK, "\n".join(lines) + "\n", payload)


def cmd_drawing(a) -> CommandResult:
    d = scheme_to_drawing(_scheme(a.scheme))
    text = drawing_to_text(d)
    if a.output:
        Path(a.output).write_text(text)
        return CommandResult(EXIT_OK, f"wrote {a.output}: h = {d.h}\n", {"h": d.h})
    return CommandResult(EXIT_OK, text, {"h": d.h})


def cmd_witnesses(a) -> CommandResult:
    if a.action == "list":
        lines = [f"{w.name}: euler genus {w.euler_genus}, {'orientable' if w.orientable else 'nonorientable'}, {w.description}"
                 for w in CATALOG.values()]
        payload = {"witnesses": [w.name for w in CATALOG.values()]}
        return CommandResult(EXIT_OK, "\n".join(lines) + "\n", payload)
    target = Path(a.dir) if a.dir else witness_dir()
    written = write_corpus(target)
    return CommandResult(EXIT_OK, f"wrote {len(written)} files to {target}\n", {"files": [p.name for p in written]})


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--budget", type=int, default=None, help="search node budget")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("-o", "--output", default=None)

    p = argparse.ArgumentParser(prog="z2lab", description="Genus and Z2-genus experiments on small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("gen", cmd_gen, "generate a graph family")
    sp.add_argument("family", choices=("kuratowski", "complete", "k3t", "grid", "wall"))
    sp.add_argument("--kind", choices=list(KURATOWSKI_KINDS))
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--s", type=int, default=None, help="second grid side (default t)")
    sp.add_argument("--n", type=int, default=5)

    for name, fn, what in (("genus", cmd_genus, "orientable genus"), ("euler-genus", cmd_euler_genus, "Euler genus")):
        sp = add(name, fn, f"exact {what} by search")
        sp.add_argument("--input", required=True)
        sp.add_argument("--witness", help="write the best scheme found here")

    sp = add("faces", cmd_faces, "trace faces of a scheme")
    sp.add_argument("--input", required=True)
    sp.add_argument("-v", "--verbose", action="store_true")

    sp = add("facewidth", cmd_facewidth, "facewidth of a projective scheme")
    sp.add_argument("--input", required=True)

    sp = add("bound", cmd_bound, "Euler-formula lower bounds")
    sp.add_argument("--input", required=True)

    sp = add("verify-kleitman", cmd_verify_kleitman, "parity check for K5 or K3,3")
    sp.add_argument("--input", default="k5", help="graph file, witness, or k5 / k33")
    sp.add_argument("--orders", type=int, default=10, help="extra random reference orders")

    sp = add("validate-drawing", cmd_validate_drawing, "check a crosscap datum")
    sp.add_argument("--drawing", required=True)
    sp.add_argument("--scheme", help="also check against the datum derived from this scheme")

    sp = add("certify-k3t", cmd_certify_k3t, "rank certificate for K3,t")
    sp.add_argument("--drawing", required=True)

    sp = add("certify-amalgam", cmd_certify_amalgam, "rank certificate for an amalgamation")
    sp.add_argument("--drawing", required=True)
    sp.add_argument("--graph")

    sp = add("certify", cmd_certify, "certify k3t | amalgam")
    sp.add_argument("target", choices=("k3t", "amalgam"))
    sp.add_argument("--drawing", required=True)
    sp.add_argument("--graph")

    sp = add("potential", cmd_potential, "evaluate the Ramsey potential")
    sp.add_argument("--k-prime", type=int, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--w-cal", type=int, required=True)

    sp = add("verify-all", cmd_verify_all, "run the acceptance suite")
    sp.add_argument("--corpus", help="witness directory (default: shipped corpus)")
    sp.add_argument("--timing", action="store_true", help="include per-criterion run times")

    sp = add("drawing", cmd_drawing, "crosscap datum of a scheme")
    sp.add_argument("--scheme", required=True)

    sp = add("witnesses", cmd_witnesses, "list or rebuild the witness corpus")
    sp.add_argument("action", choices=("list", "rebuild"))
    sp.add_argument("--dir")
    return p


def dispatch(argv: list[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(EXIT_OK if exc.code == 0 else EXIT_USAGE, "")
    try:
        res = args.fn(args)
    except (UnrealizableError, HypothesisError) as exc:
        res = CommandResult(EXIT_FAIL, f"unrealizable: {exc}\n", {"error": str(exc), "unrealizable": True})
    except (UsageError, CorpusError, OSError) as exc:
        res = CommandResult(EXIT_USAGE, f"error: {exc}\n", {"error": str(exc)})
    except (GraphError, SchemeError, DrawingError, ValueError) as exc:
        res = CommandResult(EXIT_USAGE, f"error: {exc}\n", {"error": str(exc)})
    if args.format == "machine":
        res = CommandResult(res.code, json.dumps({"exit": res.code} | res.payload, sort_keys=True) + "\n", res.payload)
    return res


def main(argv: list[str] | None = None) -> int:
    res = dispatch(argv)
    stream = sys.stdout if res.code in (EXIT_OK, EXIT_FAIL, EXIT_BUDGET) else sys.stderr
    stream.write(res.text)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
