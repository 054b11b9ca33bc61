"""Command-line front end.

Usage::

    pathtype paths  GRAPH.json [--level r|r-1]
    pathtype ideal  GRAPH.json [--project] [--mpow]
    pathtype covers GRAPH.json [--minimal|--p-minimal] [--ideals]
    pathtype type   GRAPH.json [--check] [--force]

``GRAPH.json`` may be ``-`` for stdin.  Every subcommand takes ``--r N``,
``--json`` and ``--whisker-default W``.  Exit codes: 0 success, 1 bad input,
2 weight condition refused, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .cmtype import cm_type
from .covers import cover_ideal, enumerate_minimal_covers, enumerate_p_minimal_covers, format_cover
from .errors import ConsistencyError, InputError, WeightConditionError
from .graph import WeightedGraph, enumerate_r_paths, suspend, truncate_suspension
from .monomial import format_irreducible, format_monomial
from .pathideal import project, weighted_path_ideal, whisker_exponent_sums

EXIT_OK, EXIT_INPUT, EXIT_WEIGHT, EXIT_CONSISTENCY = 0, 1, 2, 3


@dataclass
class GraphSpecDocument:
    vertices: List[str]
    edges: List[Tuple[str, str, int]]
    r: Optional[int]
    whiskers: Dict[str, List[int]]


def _positive_int(x, where):
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise InputError("%s must be a positive integer, got %s" % (where, json.dumps(x)))
    return x


def parse_document(text: str) -> GraphSpecDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON at line %d, column %d: %s"
                         % (exc.lineno, exc.colno, exc.msg)) from None
    if not isinstance(doc, dict):
        raise InputError("top level must be a JSON object")
    unknown = set(doc) - {"vertices", "edges", "r", "whiskers"}
    if unknown:
        raise InputError("unknown field(s): %s" % ", ".join(sorted(unknown)))

    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError("vertices must be a list of strings")
    names = set(vertices)
    if len(names) != len(vertices):
        raise InputError("vertex names must be unique")

    edges = []
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise InputError("edges must be a list")
    for k, e in enumerate(raw_edges):
        if not isinstance(e, dict) or not {"u", "v"} <= e.keys():
            raise InputError("edges[%d] must be an object with u, v and optional w" % k)
        for end in ("u", "v"):
            if e[end] not in names:
                raise InputError("edges[%d].%s names unknown vertex %s" % (k, end, json.dumps(e[end])))
        edges.append((e["u"], e["v"], _positive_int(e.get("w", 1), "edges[%d].w" % k)))

    r = doc.get("r")
    if r is not None:
        _positive_int(r, "r")

    whiskers = doc.get("whiskers", {})
    if not isinstance(whiskers, dict):
        raise InputError("whiskers must be an object mapping vertex names to weight lists")
    for name, ws in whiskers.items():
        if name not in names:
            raise InputError("whiskers names unknown vertex %s" % json.dumps(name))
        if not isinstance(ws, list):
            raise InputError("whiskers.%s must be a list" % name)
        for k, w in enumerate(ws):
            _positive_int(w, "whiskers.%s[%d]" % (name, k))
    return GraphSpecDocument(vertices, edges, r, whiskers)


def build_instance(doc: GraphSpecDocument, r_flag: Optional[int], whisker_default: int = 1):
    """Resolve ``r`` and whiskers; returns ``(graph, r, whisker_weights)``."""
    r = doc.r
    if r_flag is not None:
        if r is not None and r != r_flag:
            print("warning: --r %d overrides r=%d from the document" % (r_flag, r), file=sys.stderr)
        r = r_flag
    if r is None:
        raise InputError("r is neither in the document nor given with --r")
    index = {name: i for i, name in enumerate(doc.vertices)}
    g = WeightedGraph(tuple(doc.vertices), tuple((index[u], index[v], w) for u, v, w in doc.edges))
    whiskers = []
    for name in doc.vertices:
        ws = doc.whiskers.get(name, [whisker_default] * r)
        if len(ws) != r:
            raise InputError("whiskers.%s has %d weights, expected r=%d" % (name, len(ws), r))
        whiskers.append(tuple(ws))
    return g, r, whiskers


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# subcommands; each returns the text to print

def cmd_paths(g, r, whiskers, args) -> str:
    s = suspend(g, r, whiskers)
    if args.level == "r-1":
        s = truncate_suspension(s)
    paths = [[s.vertex_name(v) for v in p] for p in enumerate_r_paths(s, r)]
    if args.json:
        return _dump({"r": r, "level": s.r, "paths": paths})
    return "\n".join(" ".join(p) for p in paths)


def cmd_ideal(g, r, whiskers, args) -> str:
    s = suspend(g, r, whiskers)
    if args.mpow:
        sums = whisker_exponent_sums(s)
        if args.json:
            return _dump({"mpow": {g.labels[i]: a for i, a in enumerate(sums)}})
        return " ".join(str(a) for a in sums)
    I = weighted_path_ideal(s, r)
    if args.project:
        I = project(I)
    gens = [format_monomial(m, g.labels) for m in I.sorted_generators()]
    if args.json:
        return _dump({"r": r, "projected": bool(args.project), "generators": gens})
    return "\n".join(gens)


def cmd_covers(g, r, whiskers, args) -> str:
    t = truncate_suspension(suspend(g, r, whiskers))
    found = enumerate_p_minimal_covers(t, r) if args.p_minimal else enumerate_minimal_covers(t, r)
    rows = [(format_cover(c, g.labels), format_irreducible(cover_ideal(c, t), g.labels))
            for c in found]
    if args.json:
        key = "p_minimal" if args.p_minimal else "minimal"
        items = [{"cover": c, "ideal": q} if args.ideals else {"cover": c} for c, q in rows]
        return _dump({"r": r, "kind": key, "count": len(rows), "covers": items})
    if args.ideals:
        return "\n".join("%s -> %s" % row for row in rows)
    return "\n".join(c for c, _ in rows)


def cmd_type(g, r, whiskers, args) -> str:
    report = cm_type(g, r, whiskers, force=args.force, check=args.check)
    if args.json:
        return _dump(report.to_dict(g.labels))
    lines = ["type = %d" % report.type_value]
    if args.check:
        lines.append("combinatorial = %d, algebraic = %d: %s" % (
            report.route_combinatorial, report.route_algebraic,
            "agree" if report.routes_agree else "DISAGREE"))
    if not report.weight_condition_ok:
        lines.append("unverified: weight condition violated (forced)")
    if report.collapsed:
        lines.append("note: some p-minimal covers share a component")
    return "\n".join(lines)


COMMANDS = {"paths": cmd_paths, "ideal": cmd_ideal, "covers": cmd_covers, "type": cmd_type}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", help="graph JSON file, or - for stdin")
    common.add_argument("--r", type=int, default=None, help="path length (overrides the document)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--force", action="store_true",
                        help="run even if the weight condition fails")
    common.add_argument("--whisker-default", type=int, default=1, metavar="W",
                        help="weight for whisker edges missing from the document")

    ap = argparse.ArgumentParser(prog="pathtype", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", parents=[common], help="list r-paths of the suspension")
    p.add_argument("--level", choices=["r", "r-1"], default="r",
                   help="suspension depth to search (default r)")

    p = sub.add_parser("ideal", parents=[common], help="generators of the r-path ideal")
    p.add_argument("--project", action="store_true", help="map whisker variables to base variables")
    p.add_argument("--mpow", action="store_true", help="print the whisker exponent sums")

    p = sub.add_parser("covers", parents=[common], help="covers of the truncated suspension")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--minimal", action="store_true", help="minimal covers (default)")
    kind.add_argument("--p-minimal", action="store_true", help="p-minimal covers only")
    p.add_argument("--ideals", action="store_true", help="show each cover's irreducible ideal")

    p = sub.add_parser("type", parents=[common], help="Cohen-Macaulay type")
    p.add_argument("--check", action="store_true", help="also run the decomposition oracle")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.graph == "-":
            text = sys.stdin.read()
        else:
            with open(args.graph, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.whisker_default < 1:
            raise InputError("--whisker-default must be a positive integer")
        g, r, whiskers = build_instance(parse_document(text), args.r, args.whisker_default)
        out = COMMANDS[args.command](g, r, whiskers, args)
    except WeightConditionError as exc:
        print("error: %s" % exc, file=sys.stderr)
        for u, v, w in exc.violations:
            print("  %s-%s (weight %d)" % (g.labels[u], g.labels[v], w), file=sys.stderr)
        return EXIT_WEIGHT
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return EXIT_CONSISTENCY
    if out:
        print(out)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
