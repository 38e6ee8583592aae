"""Undirected simple graphs on dense 0-based vertex indices.

A :class:`Graph` is immutable once built.  Edges are stored as sorted
``(u, v)`` pairs with ``u < v``; every query that returns vertices returns
them in ascending order so results are reproducible run to run.

Isomorphism testing and canonical forms use colour refinement followed by
individualisation and backtracking.  That is exact but exponential in the
worst case; it is meant for graphs of a few dozen vertices.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import MalformedInputError, PreconditionError

Edge = tuple[int, int]


class Graph:
    __slots__ = ("_n", "_edges", "_adj", "_nbrs")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if vertex_count < 0:
            raise MalformedInputError(f"negative vertex count {vertex_count}")
        normalized = set()
        for pair in edges:
            u, v = pair
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise MalformedInputError(
                    f"edge ({u}, {v}) out of range for {vertex_count} vertices"
                )
            if u == v:
                raise MalformedInputError(f"self-loop at vertex {u}")
            normalized.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in normalized:
            adj[u].append(v)
            adj[v].append(u)
        self._n = vertex_count
        self._edges = tuple(sorted(normalized))
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._nbrs = tuple(frozenset(a) for a in self._adj)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise IndexError(f"vertex {v} out of range for {self._n} vertices")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph({self._n}, {list(self._edges)})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, collapsing duplicate and reversed pairs."""
    return Graph(n, pairs)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return the subgraph induced on ``s`` and the map from new to old indices.

    New vertex ``i`` corresponds to ``mapping[i]`` in ``g``; the mapping is
    ascending, so the relative order of vertices is kept.
    """
    mapping = tuple(sorted(set(s)))
    for v in mapping:
        g._check(v)
    local = {v: i for i, v in enumerate(mapping)}
    edges = [(local[u], local[v]) for u, v in g.edges if u in local and v in local]
    return Graph(len(mapping), edges), mapping


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise PreconditionError("perm is not a permutation of the vertices")
    return Graph(g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges])


def components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member.

    With ``within`` the search is restricted to the subgraph induced on
    that vertex set.
    """
    allowed = set(g.vertices()) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for start in sorted(allowed):
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adjacency[v]:
                if u in allowed and u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return all(g.has_edge(u, v) for u, v in combinations(s, 2))


# -- cliques -----------------------------------------------------------------


def cliques_of_size(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every ``k``-clique in lexicographic order."""
    if k < 1:
        raise PreconditionError("clique size must be at least 1")
    nbrs = g._nbrs

    def extend(clique: list[int], cands: list[int]) -> Iterator[tuple[int, ...]]:
        if len(clique) == k:
            yield tuple(clique)
            return
        need = k - len(clique)
        for i, v in enumerate(cands):
            if len(cands) - i < need:
                return
            rest = [u for u in cands[i + 1 :] if u in nbrs[v]]
            if len(rest) >= need - 1:
                clique.append(v)
                yield from extend(clique, rest)
                clique.pop()

    yield from extend([], list(g.vertices()))


def find_clique_of_size(g: Graph, k: int) -> tuple[int, ...] | None:
    """The lexicographically smallest ``k``-clique, or None."""
    return next(cliques_of_size(g, k), None)


def greedy_extend_clique(g: Graph, seed: Iterable[int]) -> tuple[int, ...]:
    """Grow ``seed`` to a maximal clique, adding the lowest usable index first."""
    clique = sorted(set(seed))
    if not is_clique(g, clique):
        raise PreconditionError(f"seed {clique} is not a clique")
    if clique:
        common = set.intersection(*(set(g.neighbors(v)) for v in clique))
    else:
        common = set(g.vertices())
    while common:
        v = min(common)
        clique.append(v)
        common &= g.neighbors(v)
    return tuple(sorted(clique))


def maximal_cliques(g: Graph, containing: Iterable[int] = ()) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted.

    With ``containing``, only the maximal cliques that include that clique
    are returned.
    """
    seed = set(containing)
    if not is_clique(g, seed):
        raise PreconditionError(f"{sorted(seed)} is not a clique")
    nbrs = g._nbrs
    if seed:
        cands = set.intersection(*(set(nbrs[v]) for v in seed))
    else:
        cands = set(g.vertices())
    found = []

    def bk(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            found.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: (len(p & nbrs[u]), -u))
        for v in sorted(p - nbrs[pivot]):
            bk(r | {v}, p & nbrs[v], x & nbrs[v])
            p.discard(v)
            x.add(v)

    if g.vertex_count:
        bk(seed, cands, set())
    return sorted(found)


# -- colour refinement, isomorphism, canonical form ----------------------------


def _refine(
    adjs: Sequence[Sequence[Sequence[int]]], colorings: Sequence[Sequence[int]]
) -> list[list[int]] | None:
    """Jointly refine colourings of several graphs to equitable partitions.

    Colours are renamed by the sorted order of their signatures, so equal
    colours mean the same thing in every graph.  Returns None as soon as
    the colour histograms of the graphs disagree.
    """
    current = [list(c) for c in colorings]
    ncolors = len(set().union(*current))
    while True:
        sigs = [
            [(c[v], tuple(sorted(c[u] for u in adj[v]))) for v in range(len(adj))]
            for adj, c in zip(adjs, current)
        ]
        palette = sorted(set().union(*sigs))
        index = {s: i for i, s in enumerate(palette)}
        current = [[index[s] for s in sig] for sig in sigs]
        if len(current) > 1:
            first = Counter(current[0])
            if any(Counter(c) != first for c in current[1:]):
                return None
        if len(palette) == ncolors:
            return current
        ncolors = len(palette)


def _target_cell(colors: Sequence[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Return ``phi`` with ``phi[v]`` in ``h`` for each ``v`` in ``g``, or None."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    adjs = (g.adjacency, h.adjacency)

    def match(cg: list[int], ch: list[int]) -> list[int] | None:
        refined = _refine(adjs, (cg, ch))
        if refined is None:
            return None
        cg, ch = refined
        cell = _target_cell(cg)
        if cell is None:
            where = {c: v for v, c in enumerate(ch)}
            phi = [where[c] for c in cg]
            if all(h.has_edge(phi[u], phi[v]) for u, v in g.edges):
                return phi
            return None
        x = cell[0]
        for y in (v for v, c in enumerate(ch) if c == cg[x]):
            cg2, ch2 = list(cg), list(ch)
            cg2[x] = ch2[y] = -1
            phi = match(cg2, ch2)
            if phi is not None:
                return phi
        return None

    return match(g.degrees(), h.degrees())


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def _adjacency_bits(g: Graph, order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits of ``g`` listed in ``order``, row-major.

    The first matrix entry is the most significant bit, so comparing ints
    compares the bit-strings lexicographically.
    """
    n = g.vertex_count
    width = n * (n - 1) // 2
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    bits = 0
    for u, v in g.edges:
        i, j = sorted((pos[u], pos[v]))
        idx = i * (2 * n - i - 1) // 2 + (j - i - 1)
        bits |= 1 << (width - 1 - idx)
    return bits


def canonical_form(g: Graph) -> tuple[int, int]:
    """``(vertex_count, bits)``: equal exactly for isomorphic graphs.

    ``bits`` is the lexicographically smallest adjacency bit-string over the
    leaves of the refinement search tree.  Automorphisms discovered at
    leaves prune sibling branches lying in the same orbit.
    """
    n = g.vertex_count
    if n <= 1:
        return (n, 0)
    adjs = (g.adjacency,)
    best: list = [None, None]
    autos: list[list[int]] = []

    def orbit_root(parent: list[int], v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def search(colors: list[int], prefix: list[int]) -> None:
        (colors,) = _refine(adjs, (colors,))
        cell = _target_cell(colors)
        if cell is None:
            order = sorted(range(n), key=colors.__getitem__)
            bits = _adjacency_bits(g, order)
            if best[0] is None or bits < best[0]:
                best[0], best[1] = bits, order
            elif bits == best[0]:
                gamma = [0] * n
                for a, b in zip(best[1], order):
                    gamma[a] = b
                autos.append(gamma)
            return
        explored: list[int] = []
        for w in cell:
            if explored:
                parent = list(range(n))
                for gamma in autos:
                    if all(gamma[p] == p for p in prefix):
                        for v in range(n):
                            a, b = orbit_root(parent, v), orbit_root(parent, gamma[v])
                            if a != b:
                                parent[a] = b
                root = orbit_root(parent, w)
                if any(orbit_root(parent, e) == root for e in explored):
                    continue
            explored.append(w)
            child = list(colors)
            child[w] = -1
            search(child, prefix + [w])

    search(g.degrees(), [])
    return (n, best[0])


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class given by its canonical form."""
    n, bits = canonical_form(g)
    width = n * (n - 1) // 2
    edges = []
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> (width - 1 - idx) & 1:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


# -- small families ----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def circulant_graph(n: int, jumps: Iterable[int]) -> Graph:
    return Graph(n, [(i, (i + j) % n) for i in range(n) for j in jumps if j % n])


def complement(g: Graph) -> Graph:
    return Graph(
        g.vertex_count,
        [(u, v) for u, v in combinations(g.vertices(), 2) if not g.has_edge(u, v)],
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.vertex_count
    return Graph(off + h.vertex_count, list(g.edges) + [(u + off, v + off) for u, v in h.edges])
