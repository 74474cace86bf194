"""Command line interface: ``checkerboard <command> ...``.

Exit codes: 0 success, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import census as census_mod
from . import moves
from .braidword import BraidParseError, brick_positions, linking_graph, parse_braid
from .coxeter import InvalidGraph, twist_order, verify_enumeration
from .invariants import SingularMonodromy, fingerprint, intersection_matrix, monodromy_from_form, seifert_from_form
from .openbook import destabilization_sequence, surface_summary
from .oracle import UnusedGenerator, alexander_closure, braid_permutation, component_count, genus_from_word
from .planegraph import CheckerboardGraph, GraphError, canonical_code, to_dot, validate

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def load_graph(source: str) -> CheckerboardGraph:
    """A graph JSON file, or braid word text turned into its linking graph."""
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            try:
                return CheckerboardGraph.from_json(json.load(fh))
            except (KeyError, TypeError, json.JSONDecodeError) as exc:
                raise UsageError(f"{source}: not a graph file ({exc})") from None
    return linking_graph(parse_braid(source))


def _graph_arg(args) -> CheckerboardGraph:
    if getattr(args, "braid", None):
        return linking_graph(parse_braid(args.braid))
    if not args.source:
        raise UsageError("give a graph JSON file or --braid WORD")
    return load_graph(args.source)


# -- commands -------------------------------------------------------------------

def cmd_parse(args) -> int:
    w = parse_braid(args.word)
    _emit({"strands": w.strands, "letters": list(w.letters), "length": len(w),
           "uses_all_generators": w.uses_all_generators()})
    return EXIT_OK


def cmd_linking_graph(args) -> int:
    w = parse_braid(args.word)
    g = linking_graph(w)
    if args.dot:
        pos = {v: (float(x), float(y)) for v, (x, y) in brick_positions(w).items()}
        sys.stdout.write(to_dot(g, pos))
    else:
        _emit(g.to_json())
    if args.png:
        from .plotting import plot_linking_graph

        plot_linking_graph(w, args.png)
        print(f"# figure written to {args.png}", file=sys.stderr)
    return EXIT_OK


def cmd_validate(args) -> int:
    g = _graph_arg(args)
    report = validate(g)
    _emit(report.to_json())
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_twist_order(args) -> int:
    g = _graph_arg(args)
    if not validate(g).valid:
        print("graph is not a checkerboard graph", file=sys.stderr)
        return EXIT_INVALID
    order = twist_order(g)
    _emit({"twist_order": list(order), "verified": verify_enumeration(g, order)})
    return EXIT_OK


def cmd_surface(args) -> int:
    g = _graph_arg(args)
    if not validate(g).valid:
        print("graph is not a checkerboard graph", file=sys.stderr)
        return EXIT_INVALID
    out = surface_summary(g).to_json()
    out["destabilization"] = list(destabilization_sequence(g))
    _emit(out)
    return EXIT_OK


def cmd_invariants(args) -> int:
    g = _graph_arg(args)
    if not validate(g).valid:
        print("graph is not a checkerboard graph", file=sys.stderr)
        return EXIT_INVALID
    order = twist_order(g)
    b = intersection_matrix(g, order)
    s = monodromy_from_form(b)
    fp = fingerprint(g)
    out = {"twist_order": list(order), "fingerprint": fp.to_json(), "alexander_text": str(fp.alexander)}
    if args.matrices:
        out["intersection_form"] = b
        out["monodromy"] = s
        try:
            out["seifert"] = seifert_from_form(b, s)
        except SingularMonodromy:
            out["seifert"] = None
    _emit(out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    w = parse_braid(args.word)
    delta = alexander_closure(w)
    out = {"alexander": delta.to_json(), "alexander_text": str(delta),
           "permutation": list(braid_permutation(w)), "components": component_count(w)}
    try:
        out["betti1"], out["genus"] = genus_from_word(w)
    except UnusedGenerator:
        out["betti1"] = out["genus"] = None
    _emit(out)
    return EXIT_OK


def cmd_move(args) -> int:
    g = _graph_arg(args)
    kind = args.kind
    if kind == "reverse-all":
        result = [moves.reverse_all(g)]
    elif kind in ("reverse-bridge", "reflect-reverse"):
        if args.edge is None:
            raise UsageError(f"{kind} needs --edge")
        if kind == "reverse-bridge":
            result = [moves.reverse_bridge(g, args.edge)]
        else:
            result = [moves.reflect_component_and_reverse(g, args.edge, args.side)]
    elif kind == "mutants":
        if args.vertex is None:
            raise UsageError("mutants needs --vertex")
        result = moves.cut_vertex_mutants(g, args.vertex)
    elif kind == "half-reverse":
        if args.vertices:
            vs = {int(x) for x in args.vertices.split(",")}
        else:
            vs = moves.bipartition(g)[0]
        result = [moves.tree_half_reverse(g, vs)]
    else:  # argparse restricts the choices
        raise UsageError(f"unknown move {kind}")
    payload = [h.to_json() for h in result]
    _emit(payload[0] if len(payload) == 1 and kind != "mutants" else payload)
    return EXIT_OK if all(validate(h).valid for h in result) else EXIT_INVALID


def cmd_generate(args) -> int:
    fam, params = args.family, args.params
    need = 2 if fam == "torus" else 1
    if len(params) != need:
        raise UsageError(f"{fam} takes {need} integer parameter(s)")
    try:
        if fam == "torus":
            std, alt = moves.torus_words(*params)
            _emit({"standard": str(std), "standard_strands": std.strands,
                   "alternative": str(alt), "alternative_strands": alt.strands})
            return EXIT_OK
        g = {"cycle": moves.cycle_graph, "path": moves.path_graph, "star": moves.star}[fam](params[0])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(g.to_json())
    return EXIT_OK


def cmd_isomorphic(args) -> int:
    a, b = load_graph(args.first), load_graph(args.second)
    mode = "unoriented" if args.unoriented else "oriented"
    reflect = "also-mirror" if args.mirror else "as-is"
    same = canonical_code(a, mode, reflect) == canonical_code(b, mode, reflect)
    print("isomorphic" if same else "not isomorphic")
    return EXIT_OK


def cmd_census(args) -> int:
    jobs = args.jobs if args.jobs is not None else census_mod.default_jobs()
    t0 = time.perf_counter()
    records = census_mod.census(args.genus, jobs)
    elapsed = time.perf_counter() - t0
    if args.out:
        census_mod.write_jsonl(records, args.out)
    else:
        for r in records:
            print(json.dumps(r.to_json(), separators=(",", ":")))
    if args.csv:
        census_mod.write_csv(records, args.csv)
    if args.plot:
        from .plotting import plot_census

        plot_census(records, args.plot)
    classes = census_mod.fingerprint_classes(records)
    print("---- census summary ----", file=sys.stderr)
    for genus, fps in classes.items():
        n = sum(1 for r in records if r.genus == genus)
        print(f"genus {genus}: {n} graph classes, {len(fps)} fingerprint classes", file=sys.stderr)
    print(f"elapsed {elapsed:.1f}s with {jobs} job(s)", file=sys.stderr)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="checkerboard", description="Checkerboard graphs, open books and positive braid links.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("source", nargs="?", help="graph JSON file or braid word")
        sp.add_argument("--braid", help="braid word; its linking graph is used")

    sp = sub.add_parser("parse", help="parse a braid word")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_parse)

    sp = sub.add_parser("linking-graph", help="linking graph of a braid word")
    sp.add_argument("word")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--dot", action="store_true", help="Graphviz DOT output")
    sp.add_argument("--png", metavar="PATH", help="also draw the brick diagram and graph")
    sp.set_defaults(func=cmd_linking_graph)

    for name, func, text in (
        ("validate", cmd_validate, "check the checkerboard conditions"),
        ("twist-order", cmd_twist_order, "canonical vertex enumeration"),
        ("surface", cmd_surface, "page summary and destabilization order"),
    ):
        sp = sub.add_parser(name, help=text)
        graph_input(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("invariants", help="Seifert form, Alexander polynomial, signature")
    graph_input(sp)
    sp.add_argument("--matrices", action="store_true", help="include B, S and A")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("oracle", help="word-level invariants via Burau")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("move", help="apply a graph move")
    sp.add_argument("kind", choices=["reverse-bridge", "reverse-all", "reflect-reverse", "mutants", "half-reverse"])
    graph_input(sp)
    sp.add_argument("--edge", type=int)
    sp.add_argument("--vertex", type=int)
    sp.add_argument("--side", choices=["head", "tail"], default="head", help="component mirrored by reflect-reverse")
    sp.add_argument("--vertices", help="comma-separated vertex cover for half-reverse (default: one bipartition class)")
    sp.set_defaults(func=cmd_move)

    sp = sub.add_parser("generate", help="family generators")
    sp.add_argument("family", choices=["torus", "cycle", "path", "star"])
    sp.add_argument("params", type=int, nargs="+")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("isomorphic", help="compare two graphs")
    sp.add_argument("first")
    sp.add_argument("second")
    kind = sp.add_mutually_exclusive_group()
    kind.add_argument("--oriented", action="store_true", help="respect edge orientations (default)")
    kind.add_argument("--unoriented", action="store_true")
    sp.add_argument("--mirror", action="store_true", help="also allow a reflection of the plane")
    sp.set_defaults(func=cmd_isomorphic)

    sp = sub.add_parser("census", help="positive braid knot census")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--jobs", type=int, help="worker processes (default: $CHECKER_JOBS or 1)")
    sp.add_argument("--out", help="JSONL output path (default: stdout)")
    sp.add_argument("--csv", help="also write a CSV summary")
    sp.add_argument("--plot", help="also write a per-genus bar chart (PNG)")
    sp.set_defaults(func=cmd_census)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "census" and args.genus < 1:
        parser.error("--genus must be at least 1")
    try:
        return args.func(args)
    except (UsageError, BraidParseError, GraphError, InvalidGraph, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
