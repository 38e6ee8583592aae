import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_cliques, brute_isomorphic, brute_maximal_cliques, connected_graphs, graphs
from totalgraph.constructors import line_graph, total_graph, total_of_complete
from totalgraph.errors import MalformedInputError, PreconditionError
from totalgraph.graph import (
    Graph,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    complete_graph,
    cycle_graph,
    degree,
    disjoint_union,
    find_clique_of_size,
    find_isomorphism,
    from_edge_list,
    greedy_extend_clique,
    induced_subgraph,
    is_clique,
    is_connected,
    maximal_cliques,
    path_graph,
    relabel,
    star_graph,
)


def test_from_edge_list_triangle():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert g.edge_count == 3
    assert g == complete_graph(3)


def test_from_edge_list_collapses_reversal():
    g = from_edge_list(2, [(0, 1), (1, 0)])
    assert g.edges == ((0, 1),)


@pytest.mark.parametrize("pairs", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_from_edge_list_rejects(pairs):
    with pytest.raises(MalformedInputError):
        from_edge_list(4, pairs)


def test_degree_examples():
    assert degree(complete_graph(3), 0) == 2
    assert degree(path_graph(4), 1) == 2
    assert degree(star_graph(3), 0) == 3
    with pytest.raises(IndexError):
        degree(path_graph(4), 4)


def test_induced_subgraph_examples():
    sub, mapping = induced_subgraph(complete_graph(4), {0, 1, 2})
    assert sub == complete_graph(3) and mapping == (0, 1, 2)
    sub, _ = induced_subgraph(cycle_graph(5), {0, 1, 2})
    assert sub == path_graph(3)


def test_induced_neighbourhood_in_total_of_p4():
    # T(P4): vertex 1 sees vertices 0, 2 and edges 01, 12; inside N(1) that is the path 0 - 01 - 12 - 2
    layout = total_graph(path_graph(4))
    h = layout.graph
    e01, e12 = layout.edge_vertex((0, 1)), layout.edge_vertex((1, 2))
    sub, mapping = induced_subgraph(h, h.neighbors(1))
    assert mapping == (0, 2, e01, e12)
    back = {(mapping[u], mapping[v]) for u, v in sub.edges}
    assert back == {(0, e01), (2, e12), (e01, e12)}


def test_is_connected_examples():
    assert is_connected(complete_graph(3))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert is_connected(path_graph(7))
    assert is_connected(Graph(1))


def test_isomorphism_examples():
    assert are_isomorphic(complete_graph(3), cycle_graph(3))
    lg, _ = line_graph(star_graph(3))
    assert are_isomorphic(lg, cycle_graph(3))
    two_triangles = disjoint_union(complete_graph(3), complete_graph(3))
    assert not are_isomorphic(cycle_graph(6), two_triangles)


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=9), st.randoms(use_true_random=False))
def test_isomorphism_invariant_under_relabeling(g, rnd):
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    phi = find_isomorphism(g, h)
    assert phi is not None
    assert all(h.has_edge(phi[u], phi[v]) for u, v in g.edges)
    assert are_isomorphic(h, g)
    assert canonical_form(g) == canonical_form(h)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_matches_permutation_search(g, h):
    expected = brute_isomorphic(g, h)
    assert are_isomorphic(g, h) == expected
    assert are_isomorphic(h, g) == expected
    assert (canonical_form(g) == canonical_form(h)) == expected


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_canonical_graph_is_isomorphic_representative(g):
    c = canonical_graph(g)
    assert are_isomorphic(c, g)
    assert canonical_graph(c) == c


def test_isomorphism_on_large_symmetric_graphs():
    a = total_of_complete(7).graph
    b = line_graph(complete_graph(8))[0]
    assert are_isomorphic(a, b)
    c = total_graph(cycle_graph(40)).graph
    rng = random.Random(0)
    perm = list(range(80))
    rng.shuffle(perm)
    assert are_isomorphic(c, relabel(c, perm))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_graph_invariants(g):
    assert sum(g.degrees()) == 2 * g.edge_count
    for v in g.vertices():
        for u in g.neighbors(v):
            assert v in g.neighbors(u)
    assert induced_subgraph(g, g.vertices())[0] == g


def test_find_clique_examples():
    assert find_clique_of_size(complete_graph(4), 4) == (0, 1, 2, 3)
    assert find_clique_of_size(cycle_graph(5), 3) is None
    t = total_of_complete(3).graph
    tri = find_clique_of_size(t, 3)
    assert tri is not None and is_clique(t, tri)
    assert tri == min(c for c in brute_cliques(t) if len(c) == 3)
    with pytest.raises(PreconditionError):
        find_clique_of_size(t, 0)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10), st.integers(1, 5))
def test_find_clique_matches_subset_scan(g, k):
    found = find_clique_of_size(g, k)
    sized = [c for c in brute_cliques(g) if len(c) == k]
    if found is None:
        assert sized == []
    else:
        assert is_clique(g, found) and len(found) == k
        assert found == min(sized)


def test_greedy_extend_examples():
    assert greedy_extend_clique(complete_graph(5), {0, 1}) == (0, 1, 2, 3, 4)
    assert greedy_extend_clique(cycle_graph(5), {0, 1}) == (0, 1)
    with pytest.raises(PreconditionError):
        greedy_extend_clique(cycle_graph(5), {0, 2})


def test_greedy_extend_in_total_of_k4():
    layout = total_graph(complete_graph(4))
    h = layout.graph
    sizes = sorted(len(c) for c in brute_maximal_cliques(h))
    # L(K5): five stars of size 4, ten triangles
    assert sizes == [3] * 10 + [4] * 5
    assert greedy_extend_clique(h, layout.vertex_part) == layout.vertex_part
    for c in brute_maximal_cliques(h):
        if len(c) == 4:
            assert greedy_extend_clique(h, c) == c


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_maximal_cliques_match_subset_scan(g):
    assert maximal_cliques(g) == brute_maximal_cliques(g)
