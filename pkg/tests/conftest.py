"""Independent brute-force helpers and shared corpora.

Nothing here goes through the library's refinement or search code: the
helpers enumerate permutations and subsets directly.
"""

import random
from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from totalgraph.graph import Graph
from totalgraph.oracle import enumerate_connected_graphs


def brute_isomorphic(g, h):
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    target = set(h.edges)
    for perm in permutations(range(g.vertex_count)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges):
            return True
    return False


def brute_cliques(g):
    """Every clique (as a sorted tuple), grown one higher-index vertex at a time."""
    level = [(v,) for v in g.vertices()]
    out = []
    while level:
        out += level
        level = [
            c + (v,)
            for c in level
            for v in range(c[-1] + 1, g.vertex_count)
            if all(g.has_edge(u, v) for u in c)
        ]
    return sorted(out, key=lambda c: (len(c), c))


def brute_maximal_cliques(g):
    cl = brute_cliques(g)
    sets = [set(c) for c in cl]
    return sorted(c for c, s in zip(cl, sets) if not any(s < t for t in sets))


def brute_total_graph(g):
    """T(g) straight from the definition: elements adjacent or incident."""
    elements = [("v", v) for v in g.vertices()] + [("e", e) for e in g.edges]

    def related(a, b):
        if a[0] == b[0] == "v":
            return g.has_edge(a[1], b[1])
        if a[0] == b[0] == "e":
            return bool(set(a[1]) & set(b[1]))
        v, e = (a, b) if a[0] == "v" else (b, a)
        return v[1] in e[1]

    pairs = [
        (i, j)
        for i, j in combinations(range(len(elements)), 2)
        if related(elements[i], elements[j])
    ]
    return Graph(len(elements), pairs)


def random_connected(rng, n, p):
    """Random spanning tree plus independent extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph(n, edges)


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.floats(0.0, 1.0))
    return random_connected(random.Random(seed), n, p)


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    slots = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(slots), unique=True) if slots else st.just([]))
    return Graph(n, chosen)


@pytest.fixture(scope="session")
def corpus6():
    """Every connected graph on 1..6 vertices, one per isomorphism class."""
    return [g for n in range(1, 7) for g in enumerate_connected_graphs(n)]


@pytest.fixture(scope="session")
def corpus7():
    return [g for n in range(1, 8) for g in enumerate_connected_graphs(n)]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
