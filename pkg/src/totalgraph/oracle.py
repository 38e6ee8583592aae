"""Ground truth by exhaustion: small connected graphs and brute-force inverses."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator

from .constructors import total_graph
from .errors import DomainError
from .graph import Graph, are_isomorphic, canonical_form, canonical_graph, is_connected

MAX_CENSUS_ORDER = 8
MAX_ORACLE_ORDER = 12


@lru_cache(maxsize=None)
def _census(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    # every connected graph has a vertex whose removal leaves it connected,
    # so extending each smaller class by one vertex reaches every class
    found = {}
    for g in _census(n - 1):
        for size in range(1, n):
            for nbrs in combinations(range(n - 1), size):
                ext = Graph(n, list(g.edges) + [(u, n - 1) for u in nbrs])
                key = canonical_form(ext)
                if key not in found:
                    found[key] = ext
    return tuple(
        canonical_graph(found[key])
        for key in sorted(found, key=lambda k: (found[k].edge_count, -k[1]))
    )


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs on n vertices.

    Graphs come out by ascending edge count; results are cached per n.
    """
    if not 1 <= n <= MAX_CENSUS_ORDER:
        raise DomainError(f"census supports 1 <= n <= {MAX_CENSUS_ORDER}, got {n}")
    yield from _census(n)


def connected_graphs_by_edges(n: int, m: int) -> list[Graph]:
    return [g for g in enumerate_connected_graphs(n) if g.edge_count == m]


def recount_by_edge_subsets(n: int) -> int:
    """Count connected classes on n vertices by scanning every edge subset.

    Slow (2^(n choose 2) subsets); serves as an independent check of
    :func:`enumerate_connected_graphs` for small n.
    """
    slots = list(combinations(range(n), 2))
    keys = set()
    for mask in range(1 << len(slots)):
        g = Graph(n, [e for i, e in enumerate(slots) if mask >> i & 1])
        if is_connected(g):
            keys.add(canonical_form(g))
    return len(keys)


def _total_degrees(g: Graph) -> list[int]:
    d = g.degrees()
    return sorted([2 * x for x in d] + [d[u] + d[v] for u, v in g.edges])


def _candidates(h: Graph) -> Iterator[Graph]:
    total = h.vertex_count
    if total > MAX_ORACLE_ORDER:
        raise DomainError(f"brute force supports at most {MAX_ORACLE_ORDER} vertices")
    target = sorted(h.degrees())
    for v in range(1, total + 1):
        e = total - v
        if e < v - 1:
            break
        if e > comb(v, 2):
            continue
        for g in connected_graphs_by_edges(v, e):
            if _total_degrees(g) == target:
                yield g


def brute_force_inverses(h: Graph) -> list[Graph]:
    """Every connected G (up to isomorphism) with T(G) isomorphic to h."""
    return [g for g in _candidates(h) if are_isomorphic(total_graph(g).graph, h)]


def brute_force_inverse(h: Graph) -> Graph | None:
    """The first connected G, by vertex count then census order, with T(G) isomorphic to h."""
    for g in _candidates(h):
        if are_isomorphic(total_graph(g).graph, h):
            return g
    return None
