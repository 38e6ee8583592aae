"""The canonical edge-list text format and the labeling block.

Edge list::

    # comments start with '#'
    n m
    u v        (m lines, 0 <= u < v < n)

A labeling block may follow the edges: one line per vertex of the graph,
either ``v <i>`` (the vertex stands for vertex ``i`` of the inverse graph)
or ``e <a> <b>`` (it stands for the edge ``a b`` of the inverse graph).
"""

from __future__ import annotations

from typing import Sequence

from .errors import MalformedInputError
from .graph import Graph

Label = tuple  # ("v", i) or ("e", a, b)


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line.split()))
    return out


def _ints(lineno: int, fields: Sequence[str]) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise MalformedInputError(f"line {lineno}: expected integers, got {' '.join(fields)!r}")


def _parse_edges(lines: list[tuple[int, list[str]]]) -> tuple[Graph, int]:
    if not lines:
        raise MalformedInputError("missing 'n m' header")
    lineno, fields = lines[0]
    if len(fields) != 2:
        raise MalformedInputError(f"line {lineno}: header must be 'n m'")
    n, m = _ints(lineno, fields)
    if n < 1:
        raise MalformedInputError(f"line {lineno}: graph must have at least one vertex")
    if m < 0:
        raise MalformedInputError(f"line {lineno}: negative edge count")
    if len(lines) < 1 + m:
        raise MalformedInputError(f"expected {m} edge lines, found {len(lines) - 1}")
    seen = set()
    for lineno, fields in lines[1 : 1 + m]:
        if len(fields) != 2:
            raise MalformedInputError(f"line {lineno}: edge must be 'u v'")
        u, v = _ints(lineno, fields)
        if not 0 <= u < v < n:
            raise MalformedInputError(f"line {lineno}: edge {u} {v} violates 0 <= u < v < {n}")
        if (u, v) in seen:
            raise MalformedInputError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
    return Graph(n, seen), 1 + m


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    g, used = _parse_edges(lines)
    if used != len(lines):
        lineno = lines[used][0]
        raise MalformedInputError(f"line {lineno}: unexpected content after edge list")
    return g


def parse_graph(text: str) -> Graph:
    """Parse an edge list, accepting and discarding a trailing labeling block."""
    lines = _content_lines(text)
    g, used = _parse_edges(lines)
    if used != len(lines):
        parse_labels(lines[used:], g.vertex_count)
    return g


def format_edge_list(g: Graph) -> str:
    rows = [f"{g.vertex_count} {g.edge_count}"]
    rows += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(rows) + "\n"


def parse_labels(lines: list[tuple[int, list[str]]], count: int) -> list[Label]:
    if len(lines) != count:
        raise MalformedInputError(f"labeling block needs {count} lines, found {len(lines)}")
    labels: list[Label] = []
    for lineno, fields in lines:
        tag, rest = fields[0], fields[1:]
        if tag == "v" and len(rest) == 1:
            labels.append(("v", *_ints(lineno, rest)))
        elif tag == "e" and len(rest) == 2:
            a, b = _ints(lineno, rest)
            labels.append(("e", min(a, b), max(a, b)))
        else:
            raise MalformedInputError(f"line {lineno}: label must be 'v i' or 'e a b'")
    return labels


def format_labels(labels: Sequence[Label]) -> str:
    return "".join(" ".join(str(x) for x in lab) + "\n" for lab in labels)


def parse_labeled_graph(text: str) -> tuple[Graph, list[Label]]:
    """Parse an edge list followed by a labeling block covering every vertex."""
    lines = _content_lines(text)
    g, used = _parse_edges(lines)
    return g, parse_labels(lines[used:], g.vertex_count)


def format_labeled_graph(g: Graph, labels: Sequence[Label]) -> str:
    return format_edge_list(g) + format_labels(labels)


def format_census(graphs: Sequence[Graph]) -> str:
    """Edge-list records separated by blank lines."""
    return "\n".join(format_edge_list(g) for g in graphs)
