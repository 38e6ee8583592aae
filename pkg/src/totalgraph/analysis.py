"""Local structure of total graphs.

Degree and count rules, maximal-clique classification, and the two tests
on the neighbourhood of a maximum-degree vertex: does it look like a
vertex vertex (:func:`vertex_vertex_profiles`) or like an edge vertex
(:func:`edge_vertex_check`)?  Both tests are filters.  On small degrees
the same vertex can pass both, so recognition never trusts them alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import PreconditionError
from .graph import Graph, induced_subgraph, is_clique, maximal_cliques

VERTEX = "v"
EDGE = "e"

PURE_VERTEX = "pure-vertex"
PURE_EDGE = "pure-edge"
MIXED_TRIANGLE = "mixed-triangle"
MIXED_STAR = "mixed-star"

DEFAULT_PROFILE_CAP = 64


@dataclass(frozen=True)
class PartitionLabeling:
    """Which vertices of a total graph are vertex vertices, and which edges the rest are.

    ``labels[x]`` is ``("v", i)`` when ``x`` stands for vertex ``i`` of the
    inverse graph, or ``("e", a, b)`` with ``a < b`` when it stands for the
    inverse-graph edge ``a b``.
    """

    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(tuple(lab) for lab in self.labels))

    @cached_property
    def tags(self) -> tuple[str, ...]:
        return tuple(lab[0] for lab in self.labels)

    @cached_property
    def vertex_vertices(self) -> tuple[int, ...]:
        return tuple(x for x, lab in enumerate(self.labels) if lab[0] == VERTEX)

    @cached_property
    def edge_vertices(self) -> tuple[int, ...]:
        return tuple(x for x, lab in enumerate(self.labels) if lab[0] == EDGE)

    @cached_property
    def host_of(self) -> dict[int, int]:
        """Inverse-graph vertex index -> total-graph vertex."""
        return {self.labels[x][1]: x for x in self.vertex_vertices}

    @cached_property
    def endpoints(self) -> dict[int, tuple[int, int]]:
        """Edge vertex -> its two endpoint vertex vertices (total-graph indices)."""
        host = self.host_of
        out = {}
        for x in self.edge_vertices:
            _, a, b = self.labels[x]
            if a in host and b in host:
                out[x] = tuple(sorted((host[a], host[b])))
        return out

    def is_vertex_vertex(self, x: int) -> bool:
        return self.labels[x][0] == VERTEX


@dataclass(frozen=True)
class NeighborhoodProfile:
    """A split of ``N(center)`` into candidate neighbours and candidate incident edges.

    ``pairs`` matches each incident-edge candidate with the neighbour it
    would lead to.
    """

    center: int
    k: int
    vertex_group: tuple[int, ...]
    edge_group: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]


# -- counts ------------------------------------------------------------------


def total_edge_count(g: Graph) -> int:
    """|E(T(g))| = |E| + 2|E| + sum of C(d, 2): original edges, incidences, line edges."""
    return 3 * g.edge_count + sum(comb(d, 2) for d in g.degrees())


def count_check(g: Graph, h: Graph) -> bool:
    """Do the vertex and edge counts of ``h`` fit ``h = T(g)``?"""
    nv, ne = g.vertex_count, g.edge_count
    return (
        h.vertex_count == nv + ne
        and h.edge_count == total_edge_count(g)
        and h.edge_count <= ne * (nv + 1)
    )


# -- cliques -----------------------------------------------------------------


def classify_maximal_clique(h: Graph, labeling: PartitionLabeling, clique: Sequence[int]) -> str:
    clique = tuple(sorted(set(clique)))
    if not is_clique(h, clique) or maximal_cliques(h, clique) != [clique]:
        raise PreconditionError(f"{list(clique)} is not a maximal clique")
    nvert = sum(labeling.is_vertex_vertex(x) for x in clique)
    if nvert == len(clique):
        return PURE_VERTEX
    if nvert == 0:
        return PURE_EDGE
    return MIXED_TRIANGLE if nvert >= 2 else MIXED_STAR


# -- neighbourhood tests -----------------------------------------------------


def vertex_vertex_profiles(
    h: Graph, v: int, cap: int = DEFAULT_PROFILE_CAP
) -> list[NeighborhoodProfile]:
    """Every consistent way to read ``v`` as a vertex vertex, at most ``cap`` of them.

    A profile splits N(v) (size 2k) into an edge group and a vertex group
    of k each.  The edge group is a k-clique whose members each have
    degree exactly k inside N(v); every vertex-group member has degree at
    most k there and at least one falls short.  The groups must be
    perfectly matched inside N(v), every vertex-group member must have
    even degree, and each matched pair must satisfy
    ``deg(e) == (deg(v) + deg(partner)) / 2``.
    """
    dv = h.degree(v)
    if dv == 0 or dv % 2:
        return []
    k = dv // 2
    local, mapping = induced_subgraph(h, h.neighbors(v))
    ldeg = local.degrees()
    hdeg = [h.degree(x) for x in mapping]
    # odd-degree neighbours can only be incident edges
    odd = {i for i in range(2 * k) if hdeg[i] % 2}
    if len(odd) > k:
        return []
    cands = [i for i in range(2 * k) if ldeg[i] == k and hdeg[i] > k]
    if not odd <= set(cands):
        return []
    profiles = []
    for group in _cliques_among(local, cands, k):
        if not odd <= set(group):
            continue
        rest = [i for i in range(2 * k) if i not in group]
        if max(ldeg[i] for i in rest) > k or min(ldeg[i] for i in rest) >= k:
            continue
        pairs = []
        for e in group:
            (partner,) = [i for i in local.adjacency[e] if i not in group]
            pairs.append((e, partner))
        if sorted(p for _, p in pairs) != rest:
            continue
        if any(2 * hdeg[e] != dv + hdeg[p] for e, p in pairs):
            continue
        profiles.append(
            NeighborhoodProfile(
                center=v,
                k=k,
                vertex_group=tuple(mapping[i] for i in rest),
                edge_group=tuple(mapping[i] for i in group),
                pairs=tuple((mapping[e], mapping[p]) for e, p in pairs),
            )
        )
        if len(profiles) >= cap:
            break
    return profiles


def _cliques_among(g: Graph, cands: list[int], k: int):
    """k-cliques of ``g`` using only ``cands``, lexicographic."""
    nbrs = [g.neighbors(x) for x in g.vertices()]

    def extend(clique, pool):
        if len(clique) == k:
            yield tuple(clique)
            return
        for i, x in enumerate(pool):
            if len(pool) - i < k - len(clique):
                return
            clique.append(x)
            yield from extend(clique, [y for y in pool[i + 1 :] if y in nbrs[x]])
            clique.pop()

    yield from extend([], sorted(cands))


def edge_vertex_check(h: Graph, v: int) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Can N(v) be split into two cliques of size k, each maximal within N(v)?

    Returns ``(True, (clique_a, clique_b))`` for the first such split in
    lexicographic order, else ``(False, None)``.  This is the purely
    structural test; at deg(v) = 4 genuine vertex vertices pass it too.
    """
    dv = h.degree(v)
    if dv == 0 or dv % 2:
        return False, None
    k = dv // 2
    local, mapping = induced_subgraph(h, h.neighbors(v))
    allv = set(local.vertices())
    for a in combinations(range(2 * k), k):
        if 0 not in a:
            break
        b = tuple(sorted(allv - set(a)))
        if not (is_clique(local, a) and is_clique(local, b)):
            continue
        if _is_maximal(local, a) and _is_maximal(local, b):
            return True, (tuple(mapping[i] for i in a), tuple(mapping[i] for i in b))
    return False, None


def _is_maximal(g: Graph, clique: Sequence[int]) -> bool:
    members = set(clique)
    return not any(
        all(g.has_edge(x, c) for c in clique) for x in g.vertices() if x not in members
    )
