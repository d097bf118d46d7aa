"""Command line front end.

Subcommands: compute (index table for graph6 input), construct (named
families), enumerate (isomorphism-free bicyclic catalogs), extremal
(top-k search over a class), verify (theorem suites with JSON reports).

Exit codes: 0 success / all checks pass, 1 usage or input error,
2 verification failure or enumeration budget breach.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator, Sequence, TextIO

from ._version import __version__
from .enumeration import all_bicyclic, base_graphs, bicyclic_with_matching
from .errors import CapacityError
from .families import (
    build_b1_1,
    build_b1_2,
    build_b2,
    build_b3_1,
    build_b3_2,
    build_bnab,
    build_bnm,
    build_h6,
    build_unm,
    cycle,
    path,
)
from .graph import Graph, from_graph6, to_graph6
from .invariants import matching_number, randic, sum_connectivity
from .verify import SUITES, report_json, run_suites


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.9f}"


def to_dot(g: Graph, name: str = "G") -> str:
    """Render a graph as an undirected DOT document."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.degree(v) == 0:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


# -- compute -------------------------------------------------------------


def _input_lines(paths: Sequence[str]) -> Iterator[tuple[str, int, str]]:
    if not paths:
        paths = ["-"]
    for p in paths:
        if p == "-":
            for i, line in enumerate(sys.stdin, start=1):
                yield "stdin", i, line
        else:
            with open(p, "r", encoding="ascii") as fh:
                for i, line in enumerate(fh, start=1):
                    yield p, i, line


_COMPUTE_HEADER = (
    "graph6\tn\tedges\tchi_exact\tchi\trandic_exact\trandic\tmatching\tbicyclic"
)


def cmd_compute(args: argparse.Namespace) -> int:
    out: TextIO = sys.stdout
    print(_COMPUTE_HEADER, file=out)
    bad = 0
    for label, lineno, raw in _input_lines(args.paths):
        line = raw.strip()
        if not line:
            continue
        try:
            g = from_graph6(line)
        except (ValueError, CapacityError) as exc:
            print(f"{label}:{lineno}: {exc}", file=sys.stderr)
            bad += 1
            continue
        chi = sum_connectivity(g)
        ran = randic(g)
        row = (
            to_graph6(g),
            str(g.n),
            str(g.edge_count),
            str(chi),
            _fmt(chi.to_float()),
            str(ran),
            _fmt(ran.to_float()),
            str(matching_number(g)),
            "true" if g.is_bicyclic() else "false",
        )
        print("\t".join(row), file=out)
    return 1 if bad else 0


# -- construct ------------------------------------------------------------


_FAMILIES = {
    "bnm": (build_bnm, ("n", "m"), "n >= 6 and 3 <= m <= n/2"),
    "bnab": (build_bnab, ("n", "a", "b"), "a >= b >= 3 and a + b = n + 2"),
    "unm": (build_unm, ("n", "m"), "n >= 4 and 2 <= m <= n/2"),
    "h6": (build_h6, (), "no parameters"),
    "cycle": (cycle, ("n",), "n >= 3"),
    "path": (path, ("n",), "n >= 1"),
    "b1-1": (build_b1_1, ("n", "a"), "n >= 6 and 3 <= a <= n - 3"),
    "b1-2": (build_b1_2, ("n", "a", "b"), "n >= 7, a, b >= 3, a + b <= n - 1"),
    "b2": (build_b2, ("n", "a"), "n >= 5 and 3 <= a <= n - 2"),
    "b3-1": (build_b3_1, ("n", "d"), "n >= 4 and 2 <= d <= n - 2"),
    "b3-2": (build_b3_2, ("n", "a", "d"), "n >= 5, 4 <= a <= n - 1, 2 <= d <= a - 2"),
}


def cmd_construct(args: argparse.Namespace) -> int:
    builder, wanted, ranges = _FAMILIES[args.family]
    given = {p: getattr(args, p) for p in ("n", "m", "a", "b", "d")}
    missing = [p for p in wanted if given[p] is None]
    extra = [p for p, v in given.items() if v is not None and p not in wanted]
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing " + ", ".join(f"--{p}" for p in missing))
        if extra:
            parts.append("unexpected " + ", ".join(f"--{p}" for p in extra))
        args.parser.error(
            f"family {args.family!r} takes ({', '.join(wanted) or 'nothing'}):"
            f" {'; '.join(parts)} (valid: {ranges})"
        )
    try:
        g = builder(*(given[p] for p in wanted))
    except (ValueError, CapacityError) as exc:
        args.parser.error(f"{exc} (valid: {ranges})")
    if args.out == "dot":
        print(to_dot(g))
    else:
        print(to_graph6(g))
    return 0


# -- enumerate -------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.no_pendants:
        graphs: Iterator[Graph] = base_graphs(args.n)
        if args.matching is not None:
            graphs = (g for g in graphs if matching_number(g) == args.matching)
    elif args.matching is not None:
        graphs = bicyclic_with_matching(args.n, args.matching)
    else:
        graphs = all_bicyclic(args.n)
    if args.count_only:
        print(sum(1 for _ in graphs))
    else:
        for g in graphs:
            print(to_graph6(g))
    return 0


# -- extremal --------------------------------------------------------------


def cmd_extremal(args: argparse.Namespace) -> int:
    if args.top < 1:
        raise ValueError("--top must be at least 1")
    if args.matching is not None:
        graphs = bicyclic_with_matching(args.n, args.matching)
    else:
        graphs = all_bicyclic(args.n)
    groups: dict = {}
    for g in graphs:
        groups.setdefault(sum_connectivity(g), []).append(g)
    keys = sorted(groups, reverse=(args.direction == "max"))
    print("rank\tchi\tchi_exact\tcount\tgraphs")
    for rank, key in enumerate(keys[: args.top], start=1):
        codes = sorted(to_graph6(g) for g in groups[key])
        row = (
            str(rank),
            _fmt(key.to_float()),
            str(key),
            str(len(codes)),
            " ".join(codes),
        )
        print("\t".join(row))
    return 0


# -- verify ----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    reports, partial = run_suites(
        args.suite, args.n_max, jobs=args.jobs, samples=args.samples, seed=args.seed
    )
    for rep in reports:
        tag = "PASS" if rep.get("pass") else "FAIL"
        where = [rep.get("theorem_id", "?")]
        if rep.get("n") is not None:
            where.append(f"n={rep['n']}")
        if rep.get("m") is not None:
            where.append(f"m={rep['m']}")
        print(f"{tag} {' '.join(where)}", file=sys.stderr)
    if partial:
        print("partial: enumeration budget exceeded for some jobs", file=sys.stderr)
    doc = json.dumps(report_json(reports, partial), indent=2)
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)
    ok = all(rep.get("pass") for rep in reports) and not partial
    return 0 if ok else 2


# -- parser ----------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="sumconn", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"sumconn {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="index table for graph6 input")
    p.add_argument("paths", nargs="*", help="graph6 files ('-' or none for stdin)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("construct", help="emit a named family member")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--out", choices=("graph6", "dot"), default="graph6")
    p.set_defaults(func=cmd_construct, parser=p)

    p = sub.add_parser("enumerate", help="list bicyclic graphs up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matching", type=int, help="restrict to this matching number")
    p.add_argument(
        "--no-pendants",
        action="store_true",
        help="only graphs with minimum degree >= 2",
    )
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("extremal", help="top-k chi values over a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matching", type=int)
    p.add_argument("--direction", choices=("min", "max"), required=True)
    p.add_argument(
        "--top",
        type=int,
        default=1,
        help="number of distinct values to show, each with its full tie set",
    )
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="run theorem verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except CapacityError as exc:
        print(f"sumconn: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"sumconn: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
