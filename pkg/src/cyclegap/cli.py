"""Command-line interface.

Exit codes: 0 claim verified / output produced, 1 claim refuted,
2 unknown (budget exhausted), 3 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from .corpus import check_euler, check_face5, check_theorem, load_corpus
from .embedding import Embedding, fingerprint
from .errors import CycleGapError, FormatError
from .formats import read_graphs, write_graph
from .spectrum import (
    DEFAULT_BUDGET,
    circumference,
    exists_cycle_in_range,
    gap_report,
    girth,
)
from .theorem_lab import audit_counts, reduce_glue, verify_interval_theorem

EXIT_OK, EXIT_REFUTED, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read(path: str, index: int):
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    graphs = read_graphs(data)
    if not graphs:
        raise FormatError("file holds no graphs")
    if not 0 <= index < len(graphs):
        raise UsageError(f"index {index} out of range (file holds {len(graphs)} graphs)")
    return graphs[index]


def _need_embedding(G):
    if not isinstance(G, Embedding):
        raise UsageError("this command needs an embedded graph (planar_code or JSON), not graph6")
    return G


def _fp(G) -> str | None:
    return fingerprint(G) if isinstance(G, Embedding) else None


def _witness(w) -> dict | None:
    return None if w is None else {"length": w.length, "vertices": list(w.vertices)}


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _write_out(E: Embedding, path: str | None) -> None:
    if path is None:
        fmt = "pc" if E.vertex_count <= 255 else "json"
        sys.stdout.buffer.write(write_graph(E, fmt))
        sys.stdout.buffer.flush()
        return
    fmt = "json" if path.endswith(".json") else "pc"
    Path(path).write_bytes(write_graph(E, fmt))


# ---- subcommands ----------------------------------------------------------------

def cmd_gen(a) -> int:
    def need(name):
        val = getattr(a, name)
        if val is None:
            raise UsageError(f"gen {a.family} needs --{name}")
        return val

    fam = a.family
    if fam == "hk":
        E = C.make_hk(need("k")).gadget
    elif fam == "dn":
        E = C.make_dn(need("n"))
    elif fam == "gnk":
        E = C.make_gnk(need("n"), need("k"))
    elif fam == "fanring":
        E = C.make_fan_ring(need("k"))
    elif fam == "triexpand":
        E = C.triangle_expand(C.catalog(a.name or "dodecahedron"))
    elif fam == "random":
        E = C.random_c3cp(need("n"), a.seed)
    else:
        E = C.catalog(need("name"))
    _write_out(E, a.output)
    return EXIT_OK


def cmd_spectrum(a) -> int:
    from .spectrum import enumerate_spectrum

    G = _read(a.file, a.index)
    rep = enumerate_spectrum(G, a.budget)
    if a.json:
        _emit({
            "command": "spectrum", "fingerprint": _fp(G), "parameters": {"budget": a.budget},
            "outcome": "complete" if rep.complete else "unknown",
            "window": list(rep.window), "lengths": rep.lengths,
            "witnesses": {str(L): _witness(w) for L, w in sorted(rep.present.items())},
            "nodes": rep.nodes_explored,
        })
    else:
        status = "complete" if rep.complete else "INCOMPLETE (budget)"
        print(f"spectrum {rep.lengths} window={list(rep.window)} {status} nodes={rep.nodes_explored}")
    return EXIT_OK if rep.complete else EXIT_UNKNOWN


def cmd_check_interval(a) -> int:
    G = _read(a.file, a.index)
    r = exists_cycle_in_range(G, a.a, a.b, a.budget)
    if a.json:
        _emit({"command": "check-interval", "fingerprint": _fp(G),
               "parameters": {"a": a.a, "b": a.b, "budget": a.budget},
               "outcome": r.status, "witness": _witness(r.witness), "nodes": r.nodes_explored})
    else:
        extra = f" witness length {r.witness.length}: {list(r.witness.vertices)}" if r.witness else ""
        print(f"interval [{a.a},{a.b}]: {r.status}{extra} nodes={r.nodes_explored}")
    return {"empty": EXIT_OK, "found": EXIT_REFUTED}.get(r.status, EXIT_UNKNOWN)


def cmd_gaps(a) -> int:
    G = _read(a.file, a.index)
    rep = gap_report(G, a.budget)
    if a.json:
        _emit({"command": "gaps", "fingerprint": _fp(G), "parameters": {"budget": a.budget},
               "outcome": "complete", "gaps": [list(g) for g in rep.gaps],
               "spectrum": rep.spectrum, "circumference": rep.circumference})
    else:
        print(f"spectrum {rep.spectrum} circumference={rep.circumference}")
        for lo, hi in rep.gaps:
            print(f"gap [{lo},{hi}]")
        if not rep.gaps:
            print("no gaps")
    return EXIT_OK


def cmd_girth(a) -> int:
    G = _read(a.file, a.index)
    w = girth(G)
    if a.json:
        _emit({"command": "girth", "fingerprint": _fp(G), "outcome": w.length, "witness": _witness(w)})
    else:
        print(f"girth {w.length} witness {list(w.vertices)}")
    return EXIT_OK


def cmd_circumference(a) -> int:
    G = _read(a.file, a.index)
    r = circumference(G, a.budget)
    if a.json:
        _emit({"command": "circumference", "fingerprint": _fp(G), "parameters": {"budget": a.budget},
               "outcome": "exact" if r.exact else "lower_bound", "value": r.lower_bound,
               "witness": _witness(r.witness), "nodes": r.nodes_explored})
    else:
        kind = "exact" if r.exact else "lower bound"
        print(f"circumference {r.lower_bound} ({kind}) nodes={r.nodes_explored} witness {list(r.witness.vertices)}")
    return EXIT_OK


def cmd_reduce(a) -> int:
    G = _need_embedding(_read(a.file, a.index))
    R = reduce_glue(G, a.k, a.marker)
    print(f"glue steps {len(R.glue_log)}; reduced V={R.reduced.vertex_count} E={R.reduced.edge_count}; "
          f"A={R.properties['A']} B={R.properties['B']} C={R.properties['C']}")
    if a.output:
        _write_out(R.reduced, a.output)
    return EXIT_OK if all(R.properties.values()) else EXIT_REFUTED


def cmd_audit(a) -> int:
    G = _need_embedding(_read(a.file, a.index))
    rep = audit_counts(G, a.k)
    if a.json:
        _emit({"command": "audit", "fingerprint": _fp(G), "parameters": {"k": a.k},
               "outcome": "consistent" if rep.consistent else "inconsistent",
               "n": rep.n, "x": rep.x, "y": rep.y,
               "mid_faces": [list(p) for p in rep.mid_faces],
               "lines": [{"name": q.name, "lhs": q.lhs, "relation": q.relation, "rhs": q.rhs,
                          "holds": q.holds} for q in rep.lines]})
    else:
        print(f"k={rep.k} n={rep.n} x={rep.x} y={rep.y} mid={len(rep.mid_faces)} "
              f"mid_lengths={sorted(L for _, L in rep.mid_faces)}")
        for q in rep.lines:
            print(f"{q.name:10s} {q.lhs} {q.relation} {q.rhs}  {'ok' if q.holds else 'FAILS'}")
    return EXIT_OK


def cmd_verify(a) -> int:
    G = _need_embedding(_read(a.file, a.index))
    rec = verify_interval_theorem(G, a.k, a.budget, pipeline=a.pipeline)
    outcome = rec.outcome.kind if rec.outcome is not None else "Unknown"
    wit = getattr(rec.outcome, "witness", None)
    if a.json:
        obj = {"command": "verify", "fingerprint": _fp(G),
               "parameters": {"k": a.k, "budget": a.budget, "pipeline": a.pipeline},
               "outcome": outcome, "direct": rec.direct, "witness": _witness(wit),
               "circumference_bound": rec.circumference_bound, "nodes": rec.nodes}
        if a.pipeline:
            po = rec.pipeline_outcome
            obj["pipeline"] = {"stages": [[s, v if not isinstance(v, dict) else v] for s, v in rec.pipeline],
                               "outcome": po.kind, "witness": _witness(getattr(po, "witness", None))}
        _emit(obj)
    else:
        print(f"k={a.k} window [{a.k},{2 * a.k + 9}]: {outcome}"
              + (f" length {wit.length} {list(wit.vertices)}" if wit else ""))
        if a.pipeline:
            for stage, val in rec.pipeline:
                print(f"  {stage}: {val}")
            print(f"  pipeline outcome: {rec.pipeline_outcome.kind}")
    if rec.direct == "found":
        return EXIT_OK
    return EXIT_REFUTED if rec.direct == "empty" else EXIT_UNKNOWN


def cmd_convert(a) -> int:
    G = _need_embedding(_read(a.file, a.index))
    data = write_graph(G, a.to)
    if a.output:
        Path(a.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    return EXIT_OK


def cmd_corpus(a) -> int:
    entries = load_corpus(a.dir)
    worst = EXIT_OK
    for e in entries:
        if a.check == "euler":
            ok, msg = check_euler(e)
        elif a.check == "face5":
            ok, msg = check_face5(e, a.budget)
        else:
            ok, msg = check_theorem(e, a.kmax, a.budget)
        tag = "PASS" if ok else "FAIL" if ok is False else "SKIP" if msg.startswith("skipped") else "UNKNOWN"
        print(f"{tag} {e.name} {msg}")
        if ok is False:
            worst = EXIT_REFUTED
        elif tag == "UNKNOWN" and worst == EXIT_OK:
            worst = EXIT_UNKNOWN
    print(f"{len(entries)} entries checked")
    return worst


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclegap", description="Cycle spectra of cubic plane graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", nargs="?", default="-", help="graph file, '-' for stdin")
        sp.add_argument("--index", type=int, default=0, help="graph index within the file")
        sp.set_defaults(func=func)
        return sp

    g = sub.add_parser("gen", help="generate a graph")
    g.add_argument("family", choices=["hk", "dn", "gnk", "fanring", "triexpand", "random", "catalog"])
    g.add_argument("--k", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--name")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = graph_cmd("spectrum", cmd_spectrum, "full cycle spectrum")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--json", action="store_true")

    s = graph_cmd("check-interval", cmd_check_interval, "certify that no cycle length lies in [a, b]")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--json", action="store_true")

    s = graph_cmd("gaps", cmd_gaps, "maximal gaps of the spectrum")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--json", action="store_true")

    s = graph_cmd("girth", cmd_girth, "shortest cycle")
    s.add_argument("--json", action="store_true")

    s = graph_cmd("circumference", cmd_circumference, "longest cycle (bound or exact)")
    s.add_argument("--budget", type=int, default=200_000)
    s.add_argument("--json", action="store_true")

    s = graph_cmd("reduce", cmd_reduce, "glue adjacent short faces")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--marker", type=int, required=True, help="face id of the long marker face")
    s.add_argument("-o", "--output")

    s = graph_cmd("audit", cmd_audit, "face-counting audit")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--json", action="store_true")

    s = graph_cmd("verify", cmd_verify, "check that some cycle length lies in [k, 2k+9]")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--pipeline", action="store_true")
    s.add_argument("--budget", type=int, default=200_000)
    s.add_argument("--json", action="store_true")

    s = graph_cmd("convert", cmd_convert, "convert between planar_code and JSON")
    s.add_argument("--to", choices=["pc", "json"], required=True)
    s.add_argument("-o", "--output")

    c = sub.add_parser("corpus", help="run a check over every graph file in a directory")
    c.add_argument("dir")
    c.add_argument("--check", choices=["euler", "face5", "theorem"], required=True)
    c.add_argument("--kmax", type=int, default=20)
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CycleGapError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
