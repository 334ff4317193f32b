"""Command-line entry point.

Exit status: 0 on success, 1 when a verification found violations (the
report is still written), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import TextIO

from . import counting, extremal, families, polytope
from .extremal import ClassFilter, Connectivity, StreamError
from .graph import Graph, GraphFormatError, from_graph6
from .report import emit_report, json_report

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("source", nargs="?", choices=["-"], help="read graph6 lines from stdin")
    p.add_argument("--g6", action="append", default=[], metavar="STR", help="graph6 string (repeatable)")
    p.add_argument("--file", metavar="PATH", help="file of graph6 lines")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stablecount", description="Stable-set counting and extremal verification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in (("index", "Fibonacci index F(G)"), ("alpha", "stability number")):
        p = sub.add_parser(name, help=help_)
        _add_graph_input(p)
        p.add_argument("--format", choices=["text", "tsv", "json"], default="text")

    p = sub.add_parser("critical", help="alpha-critical edges and bridge decomposition")
    _add_graph_input(p)

    p = sub.add_parser("family", help="generate a family graph or its F value")
    p.add_argument("--kind", required=True, choices=[k.value for k in families.Kind])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int)
    p.add_argument("--emit-g6", action="store_true")
    p.add_argument("--value", action="store_true")

    p = sub.add_parser("verify", help="check a bound over a graph class")
    p.add_argument("--theorem", required=True,
                   choices=["lower", "upper-general", "upper-connected", "tree", "monotonicity", "slopes"])
    p.add_argument("--n", type=int, required=True, help="order, or n_max for monotonicity/slopes")
    p.add_argument("--class", dest="cls", choices=[c.value for c in Connectivity], default=None)
    p.add_argument("--alpha", type=int)
    p.add_argument("--g6-file", metavar="PATH", help="graph6 catalog instead of labeled enumeration ('-' = stdin)")

    p = sub.add_parser("polytope", help="hull and facet check of (alpha, F) points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True, choices=[c.value for c in polytope.GraphClass])
    p.add_argument("--points", choices=["formulas", "exhaustive", "file"], default="formulas")
    p.add_argument("--points-file", metavar="PATH", help="TSV of alpha/F pairs ('-' = stdin)")
    p.add_argument("--g6-file", metavar="PATH", help="graph6 catalog turned into points")
    p.add_argument("--complete", action="store_true", help="treat file points as the full class")
    p.add_argument("--override", action="store_true", help="allow n below the proven range")

    p = sub.add_parser("search", help="pairs where more edges means more stable sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)

    p = sub.add_parser("hull", help="convex hull of a TSV of points")
    p.add_argument("--points-file", metavar="PATH", default="-")
    return parser


# -- input helpers --------------------------------------------------------


def _open_lines(path: str, stdin: TextIO) -> list[str]:
    if path == "-":
        return stdin.read().splitlines()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _input_graphs(args, stdin: TextIO) -> list[Graph]:
    lines = list(args.g6)
    if args.file:
        lines += _open_lines(args.file, stdin)
    if args.source == "-":
        lines += _open_lines("-", stdin)
    if not (args.g6 or args.file or args.source):
        raise UsageError("no input: give --g6, --file or '-'")
    out = []
    for i, line in enumerate(lines, 1):
        if line.strip():
            try:
                out.append(from_graph6(line.strip()))
            except GraphFormatError as exc:
                raise UsageError(f"input {i}: {exc}") from None
    return out


def read_points(lines: list[str]) -> list[tuple[int, int]]:
    """TSV/whitespace pairs; '#' comments and a non-numeric header are skipped."""
    pts = []
    for i, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValueError(f"points line {i}: expected two columns")
        try:
            pts.append((int(parts[0]), int(parts[1])))
        except ValueError:
            if pts or i > 1:
                raise ValueError(f"points line {i}: non-integer value") from None
    return pts


# -- commands -------------------------------------------------------------


def _per_graph(args, stdin, func, key):
    graphs = _input_graphs(args, stdin)
    rows = [(g.to_graph6(), func(g)) for g in graphs]
    if args.format == "text":
        return "".join(f"{v}\n" for _, v in rows), EXIT_OK, None
    if args.format == "tsv":
        return emit_report([("graph6", key)] + rows, "tsv"), EXIT_OK, None
    return None, EXIT_OK, ({"graphs": len(rows)}, [{"graph6": g6, key: v} for g6, v in rows])


def cmd_index(args, stdin):
    return _per_graph(args, stdin, counting.fibonacci_index, "F")


def cmd_alpha(args, stdin):
    return _per_graph(args, stdin, counting.stability_number, "alpha")


def cmd_critical(args, stdin):
    results = []
    for g in _input_graphs(args, stdin):
        edges = counting.classify_edges(g)
        dec = counting.alpha_critical_decomposition(g) if g.is_connected() else None
        results.append({
            "graph6": g.to_graph6(),
            "alpha": counting.stability_number(g),
            "alpha_critical": all(e.kind is counting.EdgeKind.ALPHA_CRITICAL for e in edges),
            "edges": [{"u": e.edge.u, "v": e.edge.v, "kind": e.kind, "bridge": e.is_bridge} for e in edges],
            "decomposition": None if dec is None else {
                "bridge": list(dec.bridge),
                "g1": dec.g1.to_graph6(), "v1": dec.v1,
                "g2": dec.g2.to_graph6(), "v2": dec.v2,
                "g1_vertices": [v for v in range(g.n) if dec.g1_mask >> v & 1],
                "critical": dec.critical,
            },
        })
    return None, EXIT_OK, ({"graphs": len(results)}, results)


def cmd_family(args, stdin):
    if not (args.emit_g6 or args.value):
        args.emit_g6 = True
    out = []
    if args.emit_g6:
        out.append(families.generate(families.FamilySpec(args.kind, args.n, args.alpha)).to_graph6())
    if args.value:
        out.append(str(families.family_value(args.kind, args.n, args.alpha)))
    return "".join(f"{line}\n" for line in out), EXIT_OK, None


def cmd_verify(args, stdin):
    th, n = args.theorem, args.n
    lines = _open_lines(args.g6_file, stdin) if args.g6_file else None
    if th in ("monotonicity", "slopes", "tree") and lines is not None:
        raise UsageError(f"--g6-file is not used by {th}")
    if th in ("monotonicity", "slopes") and (args.alpha is not None or args.cls):
        raise UsageError(f"{th} takes only --n")
    if th != "lower" and args.cls:
        raise UsageError("--class applies to the lower theorem only")
    if lines is None and th in ("lower", "upper-general", "upper-connected", "tree"):
        cap = extremal.TREE_MAX_N if th == "tree" or args.cls == "trees" else extremal.LABELED_MAX_N
        if not 1 <= n <= cap:
            raise UsageError(f"exhaustive enumeration supports 1 <= n <= {cap}")
    if th == "lower":
        rep = extremal.verify_lower_bound(ClassFilter(n, args.cls or Connectivity.ALL, args.alpha), lines)
    elif th == "upper-general":
        rep = extremal.verify_upper_bound_general(n, args.alpha, lines)
    elif th == "upper-connected":
        rep = extremal.verify_upper_bound_connected(n, args.alpha, lines)
    elif th == "tree":
        rep = extremal.verify_tree_bound(n, args.alpha)
    elif th == "monotonicity":
        rep = extremal.verify_monotonicity(n)
    else:
        rep = polytope.check_slope_lemmas(n)
    inputs = {"theorem": th, "n": n, "class": args.cls, "alpha": args.alpha,
              "source": "g6-file" if lines is not None else "enumeration"}
    return None, EXIT_OK if rep.passed else EXIT_VIOLATION, (inputs, rep)


def cmd_polytope(args, stdin):
    cls = polytope.GraphClass(args.cls)
    if args.points == "file":
        if bool(args.points_file) == bool(args.g6_file):
            raise UsageError("--points file needs exactly one of --points-file or --g6-file")
        if args.points_file:
            points = read_points(_open_lines(args.points_file, stdin))
        else:
            graphs = [from_graph6(s.strip()) for s in _open_lines(args.g6_file, stdin) if s.strip()]
            if any(g.n != args.n for g in graphs):
                raise UsageError(f"--g6-file contains graphs whose order is not {args.n}")
            points = polytope.points_from_graphs(graphs, cls)
        source = points
    else:
        if args.points_file or args.g6_file:
            raise UsageError("--points-file/--g6-file need --points file")
        if args.points == "exhaustive" and not 1 <= args.n <= extremal.LABELED_MAX_N:
            raise UsageError(f"exhaustive points support n <= {extremal.LABELED_MAX_N}")
        source = args.points
    rep = polytope.verify_polytope(args.n, cls, source, override=args.override,
                                   complete=args.complete if args.points == "file" else None)
    inputs = {"n": args.n, "class": cls.value, "points": args.points, "override": args.override}
    return None, EXIT_OK if rep.passed else EXIT_VIOLATION, (inputs, rep)


def cmd_search(args, stdin):
    if not 1 <= args.n <= 7:
        raise UsageError("search supports 1 <= n <= 7")
    pairs = extremal.search_size_fibonacci_pairs(args.n, args.alpha)
    results = [
        {
            "smaller": {"graph6": g.to_graph6(), "m": g.m, "F": counting.fibonacci_index(g)},
            "larger": {"graph6": h.to_graph6(), "m": h.m, "F": counting.fibonacci_index(h)},
        }
        for g, h in pairs
    ]
    return None, EXIT_OK, ({"n": args.n, "alpha": args.alpha}, {"pairs": results, "count": len(results)})


def cmd_hull(args, stdin):
    pts = read_points(_open_lines(args.points_file, stdin))
    return None, EXIT_OK, ({"points": len(pts)}, polytope.hull2d(pts))


COMMANDS = {
    "index": cmd_index,
    "alpha": cmd_alpha,
    "critical": cmd_critical,
    "family": cmd_family,
    "verify": cmd_verify,
    "polytope": cmd_polytope,
    "search": cmd_search,
    "hull": cmd_hull,
}


def run_cli(argv: list[str], stdin: TextIO | None = None, stdout: TextIO | None = None,
            stderr: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    t0 = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        text, code, payload = COMMANDS[args.command](args, stdin)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (UsageError, StreamError, GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if payload is not None:
        inputs, results = payload
        ms = round((time.perf_counter() - t0) * 1000)
        text = emit_report(json_report(["stablecount", *argv], inputs, results, ms))
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
