import pytest
from unbreak.framework import (
    BreakParams,
    Graph,
    InputFileError,
    Separation,
    connected_components,
    format_graph,
    induced_subgraph,
    is_separation,
    is_witnessing,
    neighborhood,
    parse_graph,
    read_graph,
    remove_edges,
    remove_vertices,
    subgraph_with_edge_map,
)


def bowtie():
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.mark.order(0)
def test_edges_normalized_and_indexed():
    g = Graph.from_edges(3, [(2, 0), (1, 1), (0, 2)])
    assert g.edges == ((0, 2), (1, 1), (0, 2))
    assert g.neighbors(1) == frozenset()
    assert g.neighbors(0) == frozenset([2])


@pytest.mark.order(1)
def test_rejects_foreign_vertices():
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 2)])
    with pytest.raises(ValueError):
        Graph([0, 0])
    with pytest.raises(ValueError):
        Graph([-1])


@pytest.mark.order(2)
def test_separation_bowtie():
    g = bowtie()
    sep = Separation({0, 1, 2}, {2, 3, 4})
    assert is_separation(g, sep.x_side, sep.y_side)
    assert sep.separator == frozenset([2])
    assert is_witnessing(g, sep, BreakParams(1, 1))
    assert not is_witnessing(g, sep, BreakParams(2, 1))
    assert not is_witnessing(g, sep, BreakParams(1, 0))


@pytest.mark.order(3)
def test_not_a_separation():
    g = bowtie()
    assert not is_separation(g, {0, 1}, {2, 3, 4})
    assert not is_separation(g, {0, 1, 2}, {3, 4})
    with pytest.raises(ValueError):
        is_separation(g, {0, 9}, {1, 2, 3, 4})


@pytest.mark.order(4)
def test_break_params():
    with pytest.raises(ValueError):
        BreakParams(0, 1)
    with pytest.raises(ValueError):
        BreakParams(1, -1)


@pytest.mark.order(5)
def test_components_and_neighborhood():
    g = Graph.from_edges(6, [(0, 1), (2, 3), (3, 4)])
    assert connected_components(g) == [
        frozenset([0, 1]),
        frozenset([2, 3, 4]),
        frozenset([5]),
    ]
    assert neighborhood(g, {3}) == frozenset([2, 4])
    assert neighborhood(g, {3}, closed=True) == frozenset([2, 3, 4])


@pytest.mark.order(6)
def test_subgraphs_keep_ids():
    g = bowtie()
    sub, edge_map = subgraph_with_edge_map(g, {2, 3, 4})
    assert sub.vertices == (2, 3, 4)
    assert edge_map == {3: 0, 4: 1, 5: 2}
    assert induced_subgraph(g, {0, 3}).m == 0
    assert remove_vertices(g, {2}).m == 2
    assert remove_edges(g, [0, 1]).edges == ((1, 2), (2, 3), (2, 4), (3, 4))


@pytest.mark.order(7)
def test_parse_and_format():
    text = "# comment\np 3 2\ne 0 1\n\ne 1 2  # trailing\n"
    g = parse_graph(text)
    assert g.n == 3 and g.edges == ((0, 1), (1, 2))
    assert parse_graph(format_graph(g)) == g


@pytest.mark.order(8)
def test_malformed_file_reports_line():
    with pytest.raises(InputFileError) as exc:
        read_graph("tests/data/malformed.txt")
    assert exc.value.lineno == 3
    assert "malformed.txt:3:" in str(exc.value)


@pytest.mark.order(9)
@pytest.mark.parametrize(
    "text,lineno",
    [
        ("e 0 1\n", 1),
        ("p 2 1\np 2 1\n", 2),
        ("p 2 2\ne 0 1\n", 1),
        ("p 2 1\nq 0 1\n", 2),
        ("p 2 1\ne 0 x\n", 2),
    ],
)
def test_parse_errors(text, lineno):
    with pytest.raises(InputFileError) as exc:
        parse_graph(text)
    assert exc.value.lineno == lineno


@pytest.mark.order(10)
def test_missing_file():
    with pytest.raises(InputFileError):
        read_graph("tests/data/does_not_exist.txt")
