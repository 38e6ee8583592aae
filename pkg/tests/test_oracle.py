import pytest

from conftest import brute_isomorphic
from totalgraph.constructors import total_graph
from totalgraph.errors import DomainError
from totalgraph.graph import Graph, are_isomorphic, complete_graph, is_connected, path_graph
from totalgraph.oracle import (
    brute_force_inverse,
    brute_force_inverses,
    enumerate_connected_graphs,
    recount_by_edge_subsets,
)

K4_MINUS_E = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)])
def test_census_counts(n, count):
    graphs = list(enumerate_connected_graphs(n))
    assert len(graphs) == count
    assert all(g.vertex_count == n and is_connected(g) for g in graphs)


@pytest.mark.parametrize("n", range(1, 6))
def test_census_matches_edge_subset_recount(n):
    assert recount_by_edge_subsets(n) == len(list(enumerate_connected_graphs(n)))


def test_census_classes_are_distinct():
    for n in range(1, 6):
        graphs = list(enumerate_connected_graphs(n))
        for i, g in enumerate(graphs):
            for h in graphs[i + 1 :]:
                assert not brute_isomorphic(g, h)


def test_census_small_lists():
    assert list(enumerate_connected_graphs(1)) == [Graph(1)]
    three = list(enumerate_connected_graphs(3))
    assert are_isomorphic(three[0], path_graph(3)) and three[1] == complete_graph(3)
    # hand listing on four vertices: P4, star, C4, paw, diamond, K4
    edges = sorted(g.edge_count for g in enumerate_connected_graphs(4))
    assert edges == [3, 3, 4, 4, 5, 6]


def test_census_range():
    with pytest.raises(DomainError):
        list(enumerate_connected_graphs(0))
    with pytest.raises(DomainError):
        list(enumerate_connected_graphs(9))


def test_brute_force_examples():
    assert brute_force_inverse(complete_graph(3)) == complete_graph(2)
    found = brute_force_inverse(total_graph(K4_MINUS_E).graph)
    assert are_isomorphic(found, K4_MINUS_E)
    assert brute_force_inverse(complete_graph(4)) is None
    with pytest.raises(DomainError):
        brute_force_inverse(path_graph(13))


def test_inverse_is_unique_on_full_search_space():
    for v in range(1, 7):
        for g in enumerate_connected_graphs(v):
            if v + g.edge_count > 12:
                continue
            (only,) = brute_force_inverses(total_graph(g).graph)
            assert are_isomorphic(only, g)
