"""Recognising total graphs and reconstructing their inverse.

:func:`recognize_complete_total` decides whether a graph is T(K_n).
:func:`inverse_total` peels maximum-degree vertex vertices off a candidate
total graph one at a time, backtracking over alternative centres and
neighbourhood profiles, and finally checks the reconstruction against the
input before reporting success.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .analysis import (
    DEFAULT_PROFILE_CAP,
    EDGE,
    VERTEX,
    PartitionLabeling,
    edge_vertex_check,
    vertex_vertex_profiles,
)
from .constructors import line_graph, total_graph
from .errors import DomainError, Refusal
from .graph import (
    Graph,
    are_isomorphic,
    cliques_of_size,
    complete_graph,
    components,
    find_clique_of_size,
    greedy_extend_clique,
    induced_subgraph,
    is_connected,
    maximal_cliques,
)

TOTAL = "total-graph"
NOT_TOTAL = "not-total-graph"
INCONCLUSIVE = "inconclusive"

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class RecognitionOutcome:
    status: str
    inverse: Graph | None = None
    labeling: PartitionLabeling | None = None
    refusal_witness: str | None = None
    nodes: int = 0
    backtracks: int = 0

    @property
    def is_total(self) -> bool:
        return self.status == TOTAL


# -- complete graphs ---------------------------------------------------------


def _complete_order(h: Graph) -> int | None:
    """n with |V| = n(n+1)/2, |E| = n(n-1)(n+1)/2 and 2(n-1)-regularity, if any."""
    nv = h.vertex_count
    n = (math.isqrt(8 * nv + 1) - 1) // 2
    if n < 1 or n * (n + 1) // 2 != nv:
        return None
    if h.edge_count != n * (n - 1) * (n + 1) // 2:
        return None
    if any(d != 2 * (n - 1) for d in h.degrees()):
        return None
    return n


def _splits_as_complete_total(h: Graph, clique: Iterable[int], n: int) -> bool:
    """Is ``h`` T(K_n) with ``clique`` as its vertex part?

    The remainder must itself be T(K_{n-1}), each remaining vertex must see
    exactly two clique vertices, distinct vertices must see distinct pairs,
    and two remaining vertices are adjacent exactly when their pairs meet.
    """
    part = set(clique)
    rest = [x for x in h.vertices() if x not in part]
    if len(part) != n or len(rest) != n * (n - 1) // 2:
        return False
    if rest:
        sub, _ = induced_subgraph(h, rest)
        if recognize_complete_total(sub) != n - 1:
            return False
    pair_of = {}
    for x in rest:
        ends = h.neighbors(x) & part
        if len(ends) != 2:
            return False
        pair_of[x] = ends
    if len(set(pair_of.values())) != len(rest):
        return False
    for i, x in enumerate(rest):
        for y in rest[i + 1 :]:
            if h.has_edge(x, y) != bool(pair_of[x] & pair_of[y]):
                return False
    return True


def recognize_complete_total(h: Graph) -> int | None:
    """n if ``h`` is isomorphic to T(K_n), else None."""
    found = _complete_vertex_part(h)
    return None if found is None else found[0]


def _complete_vertex_part(h: Graph) -> tuple[int, tuple[int, ...] | None] | None:
    n = _complete_order(h)
    if n is None or not is_connected(h):
        return None
    if n == 1:
        return 1, (0,)
    if n in (2, 3):
        target, _ = line_graph(complete_graph(n + 1))
        return (n, None) if are_isomorphic(h, target) else None
    seed = find_clique_of_size(h, 4)
    if seed is None:
        return None
    greedy = greedy_extend_clique(h, seed)
    tried = []
    if len(greedy) == n:
        tried.append(greedy)
    # a single greedy pass can end in the wrong clique; retry every extension
    tried += [c for c in maximal_cliques(h, seed) if len(c) == n and c != greedy]
    for clique in tried:
        if _splits_as_complete_total(h, clique, n):
            return n, clique
    return None


# -- labelings ---------------------------------------------------------------


def verify_partition(h: Graph, labeling: PartitionLabeling) -> Graph:
    """Check ``labeling`` against every total-graph adjacency rule and return the inverse.

    Raises :class:`Refusal` naming the first violation found.
    """
    labels = labeling.labels
    if len(labels) != h.vertex_count:
        raise Refusal("label-count", f"{len(labels)} labels for {h.vertex_count} vertices")
    names = sorted(labels[x][1] for x in labeling.vertex_vertices)
    if names != list(range(len(names))):
        raise Refusal("vertex-names", "vertex labels must be 0..p-1, each used once")
    host = labeling.host_of
    p = len(names)
    seen_edges: dict = {}
    for x in labeling.edge_vertices:
        _, a, b = labels[x]
        if a == b or a not in host or b not in host:
            raise Refusal("bad-endpoints", f"vertex {x} names edge {a} {b}")
        if (a, b) in seen_edges:
            raise Refusal("duplicate-edge", f"vertices {seen_edges[(a, b)]} and {x} both name edge {a} {b}")
        seen_edges[(a, b)] = x
        vv = [y for y in h.neighbors(x) if labeling.is_vertex_vertex(y)]
        if len(vv) != 2:
            raise Refusal("endpoint-count", f"edge vertex {x} has {len(vv)} vertex-vertex neighbours")
    inverse = Graph(p, seen_edges)
    elements = [labels[x] for x in h.vertices()]

    def related(s, t) -> bool:
        if s[0] == VERTEX and t[0] == VERTEX:
            return inverse.has_edge(s[1], t[1])
        if s[0] == EDGE and t[0] == EDGE:
            return bool({s[1], s[2]} & {t[1], t[2]})
        vert, edge = (s, t) if s[0] == VERTEX else (t, s)
        return vert[1] in edge[1:]

    for x in h.vertices():
        for y in h.vertices():
            if y <= x:
                continue
            want = related(elements[x], elements[y])
            if want != h.has_edge(x, y):
                word = "missing" if want else "unexpected"
                raise Refusal("adjacency", f"{word} edge {x} {y}")
    return inverse


# -- the peel search ---------------------------------------------------------


class _BudgetExhausted(Exception):
    pass


class _Cached:
    """Re-iterable view of a generator that only runs it once."""

    def __init__(self, gen: Iterator):
        self._gen = gen
        self._items: list = []
        self._done = False

    def __iter__(self):
        i = 0
        while True:
            if i < len(self._items):
                yield self._items[i]
                i += 1
            elif self._done:
                return
            else:
                try:
                    self._items.append(next(self._gen))
                except StopIteration:
                    self._done = True

    def empty(self) -> bool:
        return next(iter(self), None) is None


@dataclass
class _Search:
    """Depth-first peel with backtracking over centres and profiles.

    Labelings are built as ``{vertex: ("v",) | ("e", a, b)}`` with ``a, b``
    total-graph vertices.  ``req`` maps each vertex already promised to be a
    vertex vertex to the exact set of residual vertices that must be its
    incident edge vertices.
    """

    h: Graph
    budget: int
    cap: int
    nodes: int = 0
    backtracks: int = 0
    truncated: bool = False
    witness: str | None = None
    nbrs: list = field(init=False)

    def __post_init__(self):
        self.nbrs = [self.h.neighbors(x) for x in self.h.vertices()]

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted

    def _fail(self, code: str, detail: str) -> None:
        if self.witness is None:
            self.witness = f"{code} {detail}"

    def solve(self, residual: frozenset, req: dict) -> Iterator[dict]:
        comps = components(self.h, residual)
        parts = [
            _Cached(self._solve_component(frozenset(c), {y: s for y, s in req.items() if y in c}))
            for c in comps
        ]
        if any(p.empty() for p in parts):
            return

        def product(i: int) -> Iterator[dict]:
            if i == len(parts):
                yield {}
                return
            for a in parts[i]:
                for b in product(i + 1):
                    yield {**a, **b}

        yield from product(0)

    def _solve_component(self, comp: frozenset, req: dict) -> Iterator[dict]:
        self._tick()
        sub, mapping = induced_subgraph(self.h, comp)
        local = {x: i for i, x in enumerate(mapping)}
        if _complete_vertex_part(sub) is not None:
            yield from self._absorb_complete(sub, mapping, req)
            return
        degs = sub.degrees()
        top = max(degs)
        if top % 2 or top < 4:
            self._fail("max-degree", f"vertex={mapping[degs.index(top)]} degree={top}")
            return
        centers = [x for x in mapping if degs[local[x]] == top]
        for x in centers:
            raw = vertex_vertex_profiles(sub, local[x], self.cap + 1)
            if len(raw) > self.cap:
                self.truncated = True
                raw = raw[: self.cap]
            if not raw:
                if x in req:
                    self._fail("forced-vertex", f"vertex={x} has no vertex-vertex profile")
                    return
                if not edge_vertex_check(sub, local[x])[0]:
                    self._fail("no-characterization", f"vertex={x}")
                    return
                continue
            for prof in raw:
                edge_group = [mapping[i] for i in prof.edge_group]
                pairs = [(mapping[e], mapping[p]) for e, p in prof.pairs]
                new_req = self._peel(comp, req, x, edge_group, pairs)
                if new_req is None:
                    self.backtracks += 1
                    continue
                rest = comp - {x} - set(edge_group)
                for lab in self.solve(rest, new_req):
                    lab = dict(lab)
                    lab[x] = (VERTEX,)
                    for e, p in pairs:
                        lab[e] = (EDGE, x, p)
                    yield lab
                self.backtracks += 1
        self._fail("no-consistent-peel", f"component={min(comp)}")

    def _peel(self, comp, req, x, edge_group, pairs) -> dict | None:
        """Constraints for the residual after peeling ``x``; None if inconsistent."""
        egroup = set(edge_group)
        if egroup & req.keys():
            return None
        if x in req and req[x] != egroup:
            return None
        partners = {p for _, p in pairs}
        new_req = {}
        for y, s in req.items():
            if y == x or y in partners:
                continue
            if s & egroup or x in s:
                return None
            new_req[y] = s
        for e, p in pairs:
            s = (self.nbrs[e] & comp) - {x, p} - egroup
            if not s <= self.nbrs[p]:
                return None
            if p in req and req[p] != s | {e}:
                return None
            new_req[p] = frozenset(s)
        forced = new_req.keys()
        if any(s & forced for s in new_req.values()):
            return None
        return new_req

    def _absorb_complete(self, sub: Graph, mapping, req) -> Iterator[dict]:
        local_req = {mapping.index(y): {mapping.index(z) for z in s} for y, s in req.items()}
        n = _complete_order(sub)
        for clique in cliques_of_size(sub, n):
            part = set(clique)
            if not local_req.keys() <= part:
                continue
            if any((sub.neighbors(y) - part) != s for y, s in local_req.items()):
                continue
            lab = {}
            for i in sub.vertices():
                if i in part:
                    lab[mapping[i]] = (VERTEX,)
                else:
                    ends = sorted(sub.neighbors(i) & part)
                    if len(ends) != 2:
                        break
                    lab[mapping[i]] = (EDGE, mapping[ends[0]], mapping[ends[1]])
            else:
                yield lab
        self._fail("complete-constraints", f"component={mapping[0]}")


def _to_labeling(h: Graph, lab: dict) -> PartitionLabeling:
    vv = sorted(x for x, t in lab.items() if t[0] == VERTEX)
    name = {x: i for i, x in enumerate(vv)}
    labels = []
    for x in h.vertices():
        t = lab[x]
        if t[0] == VERTEX:
            labels.append((VERTEX, name[x]))
        else:
            a, b = sorted((name[t[1]], name[t[2]]))
            labels.append((EDGE, a, b))
    return PartitionLabeling(tuple(labels))


def inverse_total(
    h: Graph, budget: int = DEFAULT_BUDGET, profile_cap: int = DEFAULT_PROFILE_CAP
) -> RecognitionOutcome:
    """Decide whether ``h`` is a total graph and, if so, reconstruct its inverse.

    The status is ``"inconclusive"`` when the search hits ``budget`` nodes,
    or fails after a profile list was truncated at ``profile_cap``.
    """
    if h.vertex_count == 0:
        raise DomainError("empty graph")
    if not is_connected(h):
        raise DomainError("input graph is disconnected")
    search = _Search(h, budget, profile_cap)
    try:
        for lab in search.solve(frozenset(h.vertices()), {}):
            labeling = _to_labeling(h, lab)
            try:
                inverse = verify_partition(h, labeling)
            except Refusal as r:
                search._fail("verification", r.witness)
                continue
            if not are_isomorphic(total_graph(inverse).graph, h):
                search._fail("verification", "reconstruction is not isomorphic to input")
                continue
            return RecognitionOutcome(
                TOTAL, inverse, labeling, None, search.nodes, search.backtracks
            )
    except _BudgetExhausted:
        return RecognitionOutcome(
            INCONCLUSIVE, refusal_witness=f"budget-exhausted nodes={budget}",
            nodes=search.nodes, backtracks=search.backtracks,
        )
    if search.truncated:
        return RecognitionOutcome(
            INCONCLUSIVE, refusal_witness=f"profile-cap cap={profile_cap}",
            nodes=search.nodes, backtracks=search.backtracks,
        )
    return RecognitionOutcome(
        NOT_TOTAL, refusal_witness=search.witness or "no-partition",
        nodes=search.nodes, backtracks=search.backtracks,
    )
