"""Command-line front end.

Exit status: 0 success (or "is a total graph"), 1 negative answer, 2 bad
input, 3 inconclusive search.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import formats
from .analysis import DEFAULT_PROFILE_CAP, PartitionLabeling
from .constructors import line_graph, total_graph, total_of_complete, total_of_cycle, total_of_path
from .errors import DomainError, MalformedInputError, PreconditionError, Refusal
from .graph import Graph, are_isomorphic
from .oracle import brute_force_inverse, enumerate_connected_graphs
from .recognition import (
    DEFAULT_BUDGET,
    INCONCLUSIVE,
    TOTAL,
    RecognitionOutcome,
    inverse_total,
    recognize_complete_total,
    verify_partition,
)

OK, NEGATIVE, BAD_INPUT, INCONCLUSIVE_EXIT = 0, 1, 2, 3


def format_outcome(outcome: RecognitionOutcome) -> str:
    if outcome.status == TOTAL:
        return (
            f"{outcome.status}\n"
            + formats.format_edge_list(outcome.inverse)
            + formats.format_labels(outcome.labeling.labels)
        )
    return f"{outcome.status}\nwitness {outcome.refusal_witness}\n"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _layout_text(layout) -> str:
    return formats.format_labeled_graph(layout.graph, layout.labeling.labels)


def cmd_total(args) -> int:
    g = formats.parse_graph(_read(args.input))
    _write(args, _layout_text(total_graph(g)))
    return OK


def cmd_line(args) -> int:
    g = formats.parse_graph(_read(args.input))
    lg, edges = line_graph(g)
    _write(args, formats.format_labeled_graph(lg, [("e", a, b) for a, b in edges]))
    return OK


def cmd_inverse(args) -> int:
    h = formats.parse_graph(_read(args.input))
    outcome = inverse_total(h, budget=args.budget, profile_cap=args.profile_cap)
    _write(args, format_outcome(outcome))
    if outcome.status == TOTAL:
        return OK
    return INCONCLUSIVE_EXIT if outcome.status == INCONCLUSIVE else NEGATIVE


def cmd_construct(args) -> int:
    build = {"path": total_of_path, "cycle": total_of_cycle, "complete": total_of_complete}
    _write(args, _layout_text(build[args.family](args.n)))
    return OK


def cmd_recognize_complete(args) -> int:
    n = recognize_complete_total(formats.parse_graph(_read(args.input)))
    _write(args, f"{n if n is not None else 'none'}\n")
    return OK if n is not None else NEGATIVE


def cmd_oracle_inverse(args) -> int:
    g = brute_force_inverse(formats.parse_graph(_read(args.input)))
    _write(args, formats.format_edge_list(g) if g is not None else "none\n")
    return OK if g is not None else NEGATIVE


def cmd_verify(args) -> int:
    h, labels = formats.parse_labeled_graph(_read(args.input))
    try:
        inverse = verify_partition(h, PartitionLabeling(tuple(labels)))
    except Refusal as r:
        _write(args, f"refused\nwitness {r.witness}\n")
        return NEGATIVE
    _write(args, formats.format_edge_list(inverse))
    return OK


def _round_trip(g: Graph) -> bool:
    out = inverse_total(total_graph(g).graph)
    return out.status == TOTAL and are_isomorphic(out.inverse, g)


def selftest_report(max_n: int = 7, jobs: int = 1) -> tuple[str, bool]:
    """Round-trip every connected graph on 1..max_n vertices; return (report, all passed)."""
    lines = [f"selftest round-trip max-n={max_n}"]
    total = failures = 0
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for n in range(1, max_n + 1):
            graphs = list(enumerate_connected_graphs(n))
            if pool is not None:
                results = list(pool.map(_round_trip, graphs, chunksize=16))
            else:
                results = [_round_trip(g) for g in graphs]
            bad = [g for g, ok in zip(graphs, results) if not ok]
            lines.append(f"n={n} graphs={len(graphs)} passed={len(graphs) - len(bad)} failed={len(bad)}")
            lines += [f"FAIL n={n} edges={list(g.edges)}" for g in bad]
            total += len(graphs)
            failures += len(bad)
    finally:
        if pool is not None:
            pool.shutdown()
    lines.append(f"total graphs={total} failed={failures}")
    lines.append("PASS" if failures == 0 else "FAIL")
    return "\n".join(lines) + "\n", failures == 0


def cmd_selftest(args) -> int:
    report, ok = selftest_report(args.max_n, args.jobs)
    _write(args, report)
    return OK if ok else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totalgraph", description="Build, recognise and invert total graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, takes_input=True):
        p = sub.add_parser(name, help=help_)
        if takes_input:
            p.add_argument("input", help="edge-list file, or - for stdin")
        p.add_argument("-o", "--output", help="write the result here instead of stdout")
        p.set_defaults(func=func)
        return p

    add("total", cmd_total, "total graph with labeling block")
    add("line", cmd_line, "line graph with labeling block")
    p = add("inverse", cmd_inverse, "reconstruct the inverse total graph")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    p.add_argument("--profile-cap", type=int, default=DEFAULT_PROFILE_CAP,
                   help="profiles kept per centre")
    p = add("construct", cmd_construct, "explicit total graph of a path, cycle or complete graph",
            takes_input=False)
    p.add_argument("family", choices=["path", "cycle", "complete"])
    p.add_argument("n", type=int)
    add("recognize-complete", cmd_recognize_complete, "print n if the input is T(K_n), else none")
    add("oracle-inverse", cmd_oracle_inverse, "brute-force inverse (at most 12 vertices)")
    add("verify", cmd_verify, "check a graph against its labeling block")
    p = add("selftest", cmd_selftest, "round-trip every small connected graph", takes_input=False)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MalformedInputError, DomainError, PreconditionError, OSError) as exc:
        print(f"totalgraph: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
