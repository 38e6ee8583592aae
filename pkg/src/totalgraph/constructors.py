"""Forward constructions: line graphs, total graphs, and the explicit
constructions for paths, cycles and complete graphs.

Every total graph is returned as a :class:`TotalGraphLayout`, which keeps
track of which vertex of the total graph stands for which vertex or edge
of the original graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .analysis import PartitionLabeling
from .errors import DomainError, PreconditionError, Refusal
from .graph import (
    Edge,
    Graph,
    complete_graph,
    cycle_graph,
    find_isomorphism,
    is_connected,
    path_graph,
)


@dataclass(frozen=True)
class TotalGraphLayout:
    """A total graph together with its vertex part and edge part.

    ``vertex_part[i]`` is the vertex of ``graph`` standing for vertex ``i``
    of ``original``; ``edge_part`` lists ``(vertex of graph, original edge)``
    for every edge vertex, by ascending vertex of ``graph``.
    """

    graph: Graph
    original: Graph
    vertex_part: tuple[int, ...]
    edge_part: tuple[tuple[int, Edge], ...]

    @property
    def labeling(self) -> PartitionLabeling:
        labels: list = [None] * self.graph.vertex_count
        for i, x in enumerate(self.vertex_part):
            labels[x] = ("v", i)
        for x, (a, b) in self.edge_part:
            labels[x] = ("e", a, b)
        return PartitionLabeling(tuple(labels))

    def edge_vertex(self, edge: Edge) -> int:
        edge = tuple(sorted(edge))
        for x, e in self.edge_part:
            if e == edge:
                return x
        raise KeyError(edge)


@dataclass(frozen=True)
class StructureCertificate:
    """Two disjoint cycles (or paths) and the hamiltonian cycle (or path) interleaving them."""

    kind: str  # "cycle" or "path"
    first_sequence: tuple[int, ...]
    second_sequence: tuple[int, ...]
    interleaved_sequence: tuple[int, ...]


def line_graph(g: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    """L(g), plus the edge of ``g`` that each line-graph vertex stands for."""
    if g.edge_count == 0:
        raise DomainError("the line graph of an edgeless graph is empty")
    index = {e: i for i, e in enumerate(g.edges)}
    pairs = []
    for v in g.vertices():
        incident = [index[tuple(sorted((v, u)))] for u in g.adjacency[v]]
        pairs.extend(combinations(incident, 2))
    return Graph(g.edge_count, pairs), g.edges


def total_graph(g: Graph) -> TotalGraphLayout:
    """T(g): vertex part at indices 0..|V|-1, then one vertex per edge in sorted order."""
    n = g.vertex_count
    if n == 0:
        raise DomainError("the total graph needs at least one vertex")
    if not is_connected(g):
        raise DomainError("total graphs are only built for connected graphs")
    lg, edges = line_graph(g) if g.edge_count else (Graph(0), ())
    pairs = list(g.edges)
    for i, (u, v) in enumerate(edges):
        pairs += [(u, n + i), (v, n + i)]
    pairs += [(n + a, n + b) for a, b in lg.edges]
    return TotalGraphLayout(
        graph=Graph(n + len(edges), pairs),
        original=g,
        vertex_part=tuple(range(n)),
        edge_part=tuple((n + i, e) for i, e in enumerate(edges)),
    )


# -- complete graphs: the group construction ---------------------------------


@dataclass(frozen=True)
class GroupConstruction:
    """Intermediate state of the group construction of T(K_n).

    ``groups[i - 1]`` holds the labels ``(i, j)`` of group ``i``; ``merged``
    maps every label to its vertex after merging ``(i, j)`` with ``(j, i)``.
    """

    n: int
    groups: tuple[tuple[tuple[int, int], ...], ...]
    group_edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    merged: dict


def group_construction(n: int) -> GroupConstruction:
    if n < 1:
        raise PreconditionError("n must be at least 1")
    top = n + 1
    groups = tuple(
        tuple((i, j) for j in range(1, top + 1) if j != i) for i in range(1, top + 1)
    )
    group_edges = tuple(pair for grp in groups for pair in combinations(grp, 2))

    parent = {lab: lab for grp in groups for lab in grp}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in parent:
        ri, rj = find((i, j)), find((j, i))
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    # group n+1 becomes the vertex part; merged vertex {j, n+1} is vertex j-1
    roots = sorted({find(lab) for lab in parent})
    vertex_roots = [find((top, j)) for j in range(1, top)]
    edge_roots = sorted(set(roots) - set(vertex_roots))
    index = {r: i for i, r in enumerate(vertex_roots + edge_roots)}
    merged = {lab: index[find(lab)] for lab in parent}
    return GroupConstruction(n, groups, group_edges, merged)


def total_of_complete(n: int) -> TotalGraphLayout:
    """T(K_n) built from n+1 groups of n elements by merging paired elements."""
    gc = group_construction(n)
    top = n + 1
    pairs = [(gc.merged[a], gc.merged[b]) for a, b in gc.group_edges]
    graph = Graph(n * (n + 1) // 2, pairs)
    vertex_part = tuple(gc.merged[(top, j)] for j in range(1, top))
    edge_part = sorted(
        (gc.merged[(a, b)], (a - 1, b - 1)) for a, b in combinations(range(1, top), 2)
    )
    return TotalGraphLayout(graph, complete_graph(n), vertex_part, tuple(edge_part))


# -- cycles and paths: the interleaving construction -------------------------


def _sequence_edges(seq, closed):
    edges = list(zip(seq, seq[1:]))
    if closed and len(seq) > 2:
        edges.append((seq[-1], seq[0]))
    return edges


def cycle_certificate_template(n: int) -> StructureCertificate:
    if n < 3:
        raise PreconditionError("cycles need n >= 3")
    first = tuple(range(n))
    second = tuple(range(n, 2 * n))
    inter = tuple(x for i in range(n) for x in (i, n + i))
    return StructureCertificate("cycle", first, second, inter)


def path_certificate_template(n: int) -> StructureCertificate:
    if n < 2:
        raise PreconditionError("paths need n >= 2")
    first = tuple(range(n))
    second = tuple(range(n, 2 * n - 1))
    inter = tuple(x for i in range(n - 1) for x in (i, n + i)) + (n - 1,)
    return StructureCertificate("path", first, second, inter)


def _certificate_graph(cert: StructureCertificate) -> Graph:
    closed = cert.kind == "cycle"
    pairs = (
        _sequence_edges(cert.first_sequence, closed)
        + _sequence_edges(cert.second_sequence, closed)
        + _sequence_edges(cert.interleaved_sequence, closed)
    )
    return Graph(len(cert.interleaved_sequence), pairs)


def total_of_cycle(n: int) -> TotalGraphLayout:
    """T(C_n): two n-cycles joined by the hamiltonian cycle v1, v_{n+1}, v2, v_{n+2}, ..."""
    graph = _certificate_graph(cycle_certificate_template(n))
    edge_part = tuple((n + i, tuple(sorted((i, (i + 1) % n)))) for i in range(n))
    return TotalGraphLayout(graph, cycle_graph(n), tuple(range(n)), edge_part)


def total_of_path(n: int) -> TotalGraphLayout:
    """T(P_n): paths on n and n-1 vertices joined by an interleaving hamiltonian path."""
    graph = _certificate_graph(path_certificate_template(n))
    edge_part = tuple((n + i, (i, i + 1)) for i in range(n - 1))
    return TotalGraphLayout(graph, path_graph(n), tuple(range(n)), edge_part)


def validate_certificate(h: Graph, cert: StructureCertificate) -> None:
    """Raise :class:`Refusal` unless ``cert`` exhibits the claimed structure in ``h``.

    Checked: the two sequences are disjoint and cover every vertex, each is
    a cycle (path) in ``h``, the interleaved sequence alternates between
    them and is a hamiltonian cycle (path) sharing no edge with them, and
    the three edge sets together are exactly the edges of ``h``.
    """
    closed = cert.kind == "cycle"
    first, second, inter = cert.first_sequence, cert.second_sequence, cert.interleaved_sequence
    n = len(first)
    want_second = n if closed else n - 1
    if len(second) != want_second:
        raise Refusal("sequence-length", f"second sequence has {len(second)} vertices")
    if set(first) & set(second):
        raise Refusal("not-disjoint", "the two sequences share a vertex")
    if sorted(first + second) != list(h.vertices()):
        raise Refusal("not-exhaustive", "the sequences do not cover every vertex")
    expected = [x for i in range(want_second) for x in (first[i], second[i])]
    if not closed:
        expected.append(first[-1])
    if list(inter) != expected:
        raise Refusal("not-interleaved", "hamiltonian order does not alternate the sequences")
    parts = []
    for name, seq in (("first", first), ("second", second), ("interleaved", inter)):
        edges = {frozenset(e) for e in _sequence_edges(seq, closed)}
        for e in edges:
            u, v = sorted(e)
            if not h.has_edge(u, v):
                raise Refusal("missing-edge", f"{name} sequence uses non-edge {u} {v}")
        parts.append(edges)
    if parts[2] & (parts[0] | parts[1]):
        raise Refusal("not-edge-disjoint", "hamiltonian sequence reuses a sequence edge")
    if parts[0] | parts[1] | parts[2] != {frozenset(e) for e in h.edges}:
        raise Refusal("extra-edges", "h has edges outside the three sequences")


def _check_structure(h: Graph, layout: TotalGraphLayout, template: StructureCertificate):
    target = layout.graph
    if h.vertex_count != target.vertex_count:
        raise Refusal(
            "vertex-count", f"{h.vertex_count} vertices, expected {target.vertex_count}"
        )
    if h.edge_count != target.edge_count:
        raise Refusal("edge-count", f"{h.edge_count} edges, expected {target.edge_count}")
    phi = find_isomorphism(target, h)
    if phi is None:
        raise Refusal("not-isomorphic", f"not the total graph of {template.kind} on {len(template.first_sequence)} vertices")
    cert = StructureCertificate(
        template.kind,
        tuple(phi[x] for x in template.first_sequence),
        tuple(phi[x] for x in template.second_sequence),
        tuple(phi[x] for x in template.interleaved_sequence),
    )
    validate_certificate(h, cert)
    return cert


def check_total_of_cycle(h: Graph, n: int) -> StructureCertificate:
    """Certificate that ``h`` is T(C_n); raises :class:`Refusal` otherwise."""
    if n < 3:
        raise Refusal("bad-order", "cycles need n >= 3")
    return _check_structure(h, total_of_cycle(n), cycle_certificate_template(n))


def check_total_of_path(h: Graph, n: int) -> StructureCertificate:
    """Certificate that ``h`` is T(P_n); raises :class:`Refusal` otherwise."""
    if n < 2:
        raise Refusal("bad-order", "paths need n >= 2")
    return _check_structure(h, total_of_path(n), path_certificate_template(n))
