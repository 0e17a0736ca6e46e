import networkx as nx
import pytest
from unbreak.enumeration import (
    ConnectedSetQuery,
    count_bound,
    enum_connected_sets,
    iter_connected_sets,
)
from unbreak.framework import Graph, read_graph
from unbreak.oracle import oracle_connected_sets


def small_graphs():
    for i, h in enumerate(nx.graph_atlas_g()):
        if 0 < h.number_of_nodes() <= 6 and i % 3 == 0:
            yield Graph.from_edges(h.number_of_nodes(), h.edges())


@pytest.mark.order(80)
def test_path_sets():
    g = read_graph("tests/data/path6_structure.txt")
    sets = enum_connected_sets(g, ConnectedSetQuery(0, 3, 1))
    assert sets == [frozenset([0]), frozenset([0, 1]), frozenset([0, 1, 2])]
    middle = enum_connected_sets(g, ConnectedSetQuery(2, 2, 2))
    assert middle == [frozenset([1, 2]), frozenset([2]), frozenset([2, 3])]


@pytest.mark.order(81)
def test_neighborhood_budget_zero():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert enum_connected_sets(g, ConnectedSetQuery(3, 5, 0)) == [frozenset([3, 4])]
    assert enum_connected_sets(g, ConnectedSetQuery(3, 1, 0)) == []


@pytest.mark.order(82)
@pytest.mark.parametrize("p,q", [(1, 0), (2, 1), (3, 2), (4, 1), (6, 3)])
def test_matches_oracle(p, q):
    for g in small_graphs():
        for root in g.vertices:
            query = ConnectedSetQuery(root, p, q)
            assert enum_connected_sets(g, query) == oracle_connected_sets(g, query)


@pytest.mark.order(83)
@pytest.mark.parametrize("p,q", [(2, 2), (3, 3), (4, 2)])
def test_count_bound_and_uniqueness(p, q):
    for g in small_graphs():
        for root in g.vertices:
            found = list(iter_connected_sets(g, ConnectedSetQuery(root, p, q)))
            assert len(found) == len(set(found))
            assert len(found) <= count_bound(p, q)


@pytest.mark.order(84)
def test_visitor_streams_sets():
    g = read_graph("tests/data/bowtie.txt")
    seen = []
    count = enum_connected_sets(g, ConnectedSetQuery(2, 3, 4), visitor=seen.append)
    assert count == len(seen)
    assert sorted(seen, key=sorted) == enum_connected_sets(g, ConnectedSetQuery(2, 3, 4))


@pytest.mark.order(85)
def test_bad_queries():
    g = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(ValueError):
        ConnectedSetQuery(0, 0, 1)
    with pytest.raises(ValueError):
        ConnectedSetQuery(0, 1, -1)
    with pytest.raises(ValueError):
        enum_connected_sets(g, ConnectedSetQuery(5, 1, 1))
