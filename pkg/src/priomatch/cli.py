"""Command-line entry point ``priomatch``.

Exit codes: 0 success, 1 parse or input error, 2 verification failure,
3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import partial
from pathlib import Path
from typing import Optional, Sequence

from .bench import HEADER, run_bench
from .dot import matching_to_dot, trace_solve
from .driver import max_priority_matching, two_priority_matching
from .graph import Graph, is_valid_matching
from .io import ParseError, generate_random, parse_graph, parse_matching, render_graph, render_matching
from .oracle import BudgetExceeded, oracle_best_score
from .score import priority_score

EXIT_PARSE, EXIT_VERIFY, EXIT_BUDGET = 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _read_vertex_set(path: str, n: int) -> set[int]:
    out = set()
    for lineno, line in enumerate(_read(path).splitlines(), 1):
        line = line.split("#", 1)[0]
        for tok in line.split():
            try:
                u = int(tok)
            except ValueError:
                raise ParseError(f"bad vertex id {tok!r}", lineno, line.index(tok) + 1) from None
            if not 1 <= u <= n:
                raise ParseError(f"vertex id {u} outside [1, {n}]", lineno, line.index(tok) + 1)
            out.add(u)
    return out


def _json_trace(stream):
    def emit(event: dict) -> None:
        stream.write(json.dumps(event, separators=(",", ":")) + "\n")
    return emit


def cmd_solve(args) -> int:
    graph = _load_graph(args.file)
    trace = _json_trace(sys.stderr) if args.trace else None
    if args.two_priority:
        s = _read_vertex_set(args.two_priority, graph.n)
        report = two_priority_matching(graph, s, trace)
        out_graph = report.matching.graph
    else:
        report = max_priority_matching(graph, trace)
        out_graph = graph
    sys.stdout.write(render_matching(out_graph, report.matching))
    if args.dot:
        Path(args.dot).write_text(matching_to_dot(out_graph, report.matching))
    return 0


def cmd_oracle(args) -> int:
    graph = _load_graph(args.file)
    sys.stdout.write(f"s {oracle_best_score(graph).render()}".rstrip() + "\n")
    return 0


def cmd_verify(args) -> int:
    graph = _load_graph(args.graph)
    text = _read(args.matching)
    try:
        matching, stated = parse_matching(graph, text)
    except ParseError as exc:
        print(f"invalid matching: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    ok, vertex = is_valid_matching(graph, matching.edges)
    if not ok:
        print(f"invalid matching at vertex {vertex}", file=sys.stderr)
        return EXIT_VERIFY
    actual = priority_score(graph, matching)
    if stated != actual:
        print(f"score line {stated.render()!r} != actual {actual.render()!r}",
              file=sys.stderr)
        return EXIT_VERIFY
    print("ok")
    return 0


def cmd_gen(args) -> int:
    graph = generate_random(args.n, args.m, args.priorities, args.seed)
    sys.stdout.write(render_graph(graph))
    return 0


def cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",") if x]
    print(HEADER, flush=True)
    for n in sizes:
        for rec in run_bench([n], args.seed, args.density, args.priorities, args.repeats):
            print(rec.line(), flush=True)
    return 0


def _write_step(outdir: Path, k: int, text: str) -> None:
    (outdir / f"step{k:05d}.dot").write_text(text)


def cmd_trace(args) -> int:
    graph = _load_graph(args.file)
    write_dot = None
    if args.dot_dir:
        outdir = Path(args.dot_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        write_dot = partial(_write_step, outdir)
    matching = trace_solve(graph, _json_trace(sys.stdout), write_dot)
    if args.result:
        Path(args.result).write_text(render_matching(graph, matching))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="priomatch", description="Maximum priority matchings in general graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a maximum priority matching")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--two-priority", metavar="SETFILE",
                   help="file of favoured vertex ids; overrides the file's priorities")
    p.add_argument("--trace", action="store_true", help="JSON search events on stderr")
    p.add_argument("--dot", metavar="OUT", help="write the matched graph as DOT")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="best score by exhaustive enumeration")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a matching file against a graph")
    p.add_argument("graph")
    p.add_argument("matching")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="seeded random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--priorities", metavar="SPEC",
                   help="'1,2,5', '1-3' (uniform) or '1:0.3,2:0.7' (weighted); default 1-n")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time solves on random graphs")
    p.add_argument("--sizes", default="500,1000,2000,4000")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--density", type=int, default=5, help="edges per vertex (m = density*n)")
    p.add_argument("--priorities", metavar="SPEC")
    p.add_argument("--repeats", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("trace", help="replay a solve as JSON events")
    p.add_argument("file")
    p.add_argument("--dot-dir", metavar="DIR", help="write a DOT snapshot per step")
    p.add_argument("--result", metavar="OUT", help="also write the final matching file")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
