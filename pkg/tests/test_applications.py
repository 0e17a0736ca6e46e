from itertools import combinations
import networkx as nx
import pytest
from unbreak.applications import (
    BranchStats,
    MwcuInstance,
    PendantInstance,
    RbcuInstance,
    constant_schedule,
    default_s_of_k,
    mwcu_solve_unbreakable,
    mwcu_to_rbcu,
    parse_mwcu_lines,
    pendant_check,
    pendant_size_bound,
    pendant_solve_unbreakable,
    rbcu_check,
    rbcu_solve_unbreakable,
    read_mwcu,
    separation_bound_check,
    treewidth,
    treewidth_at_most,
)
from unbreak.finite_state import get_property
from unbreak.framework import Graph, InputFileError, read_graph
from unbreak.oracle import (
    oracle_mwcu,
    oracle_pendant,
    oracle_rbcu,
    oracle_treewidth,
    oracle_witnessing_separation,
)


def atlas(lo, hi, every=1):
    for i, h in enumerate(nx.graph_atlas_g()):
        if lo <= h.number_of_nodes() <= hi and i % every == 0:
            yield Graph.from_edges(h.number_of_nodes(), h.edges())


def complete(n):
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def class_patterns(terminals):
    """A few ways to split the terminals into classes."""
    a, b, c = terminals
    return [
        ({a}, {b}, {c}),
        ({a, b}, {c}),
        ({a, c}, {b}),
        ({a, b, c},),
    ]


def mwcu_instances(k):
    for g in atlas(4, 6, every=2):
        for classes in class_patterns((0, g.n // 2, g.n - 1)):
            yield MwcuInstance(g, frozenset().union(*classes), classes, k)


@pytest.mark.order(140)
def test_read_mwcu():
    inst = read_mwcu("tests/data/mwcu_path.txt", 1)
    assert inst.terminals == frozenset([0, 2])
    assert inst.classes == (frozenset([0]), frozenset([2]))
    assert not inst.related(0, 2)
    assert mwcu_solve_unbreakable(inst) == frozenset([1])


@pytest.mark.order(141)
def test_unclassed_terminals_become_singletons():
    lines = ["p 4 3", "e 0 1", "e 1 2", "e 2 3", "t 0", "t 3", "t 1", "r 0 3"]
    inst = parse_mwcu_lines(lines, 1)
    assert inst.classes == (frozenset([0, 3]), frozenset([1]))
    assert inst.related(0, 3)


@pytest.mark.order(142)
@pytest.mark.parametrize(
    "extra,lineno",
    [
        (["t 0", "t 0"], 4),
        (["t 0", "r 0 1"], 4),
        (["t 0 1"], 3),
        (["t x"], 3),
        (["t 0", "t 1", "r 0", "r 0 1"], 6),
        (["t 0", "r"], 4),
    ],
)
def test_mwcu_parse_errors(extra, lineno):
    with pytest.raises(InputFileError) as exc:
        parse_mwcu_lines(["p 2 1", "e 0 1"] + extra, 1)
    assert exc.value.lineno == lineno


@pytest.mark.order(143)
def test_instance_validation():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        MwcuInstance(g, frozenset([0, 2]), (frozenset([0]),), 1)
    with pytest.raises(ValueError):
        MwcuInstance(g, frozenset([0, 2]), (frozenset([0, 2]), frozenset([2])), 1)
    with pytest.raises(ValueError):
        MwcuInstance(g, frozenset([0, 2]), (frozenset([0, 2]),), -1)
    with pytest.raises(ValueError):
        RbcuInstance(g, frozenset([0, 1]), 1)
    with pytest.raises(ValueError):
        RbcuInstance(g, frozenset([5]), 1)


@pytest.mark.order(144)
def test_reduction_inserts_red_cliques():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    inst = MwcuInstance(g, frozenset([0, 2, 4]), (frozenset([0, 4]), frozenset([2])), 1)
    rbcu, inserted = mwcu_to_rbcu(inst)
    assert sorted(inserted.values()) == [(0, 4), (2, 2)]
    assert rbcu.graph.m == g.m + 2
    assert rbcu.cliques == [frozenset([0, 4]), frozenset([2])]
    assert rbcu.blue_graph == g
    assert rbcu.red_vertices == inst.terminals


@pytest.mark.order(145)
@pytest.mark.parametrize("k", [1, 2])
def test_reduction_preserves_solutions(k):
    for inst in mwcu_instances(k):
        rbcu, _ = mwcu_to_rbcu(inst)
        assert (oracle_mwcu(inst) is None) == (oracle_rbcu(rbcu) is None)
        found = oracle_mwcu(inst)
        if found is not None:
            assert rbcu_check(rbcu, found)


@pytest.mark.order(146)
@pytest.mark.parametrize("k,guess_large", [(1, True), (2, True), (1, False), (2, False)])
def test_solver_matches_oracle_on_unbreakable_graphs(k, guess_large):
    for inst in mwcu_instances(k):
        s = default_s_of_k(k)
        assert oracle_witnessing_separation(inst.graph, s, k) is None
        stats = BranchStats()
        found = mwcu_solve_unbreakable(inst, guess_large=guess_large, stats=stats)
        truth = oracle_mwcu(inst)
        assert (found is None) == (truth is None)
        if found is not None:
            rbcu, _ = mwcu_to_rbcu(inst)
            assert rbcu_check(rbcu, found)
            assert len(found) >= len(truth)
            assert separation_bound_check(inst, found)
        assert stats.max_depth <= k + 1


@pytest.mark.order(147)
def test_adjacent_terminals_cannot_be_cut():
    triangle = complete(3)
    inst = MwcuInstance(triangle, frozenset([0, 1]), (frozenset([0]), frozenset([1])), 3)
    assert mwcu_solve_unbreakable(inst) is None
    assert oracle_mwcu(inst) is None


@pytest.mark.order(148)
def test_rbcu_check():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    rbcu = RbcuInstance(g, frozenset([4]), 2)
    assert rbcu.cliques == [frozenset([0, 2])]
    assert rbcu_check(rbcu, [])
    assert not rbcu_check(rbcu, [0])
    assert rbcu_solve_unbreakable(rbcu) == frozenset()


@pytest.mark.order(149)
def test_no_cliques():
    inst = RbcuInstance(complete(4), frozenset(), 0)
    assert rbcu_solve_unbreakable(inst) == frozenset()


@pytest.mark.order(150)
def test_constant_schedule():
    assert constant_schedule(7)(3) == 7
    assert default_s_of_k(3) == 5
    inst = read_mwcu("tests/data/mwcu_path.txt", 1)
    assert mwcu_solve_unbreakable(inst, s_of_k=constant_schedule(1)) == frozenset([1])


@pytest.mark.order(151)
def test_separation_bound_check():
    g = Graph.from_edges(9, [(i, i + 1) for i in range(8)])
    inst = MwcuInstance(g, frozenset([0, 8]), (frozenset([0]), frozenset([8])), 1)
    assert not separation_bound_check(inst, {4})
    assert separation_bound_check(inst, {4}, constant_schedule(4))
    pendant = PendantInstance(g, 1, 1, get_property("true"))
    assert pendant_size_bound(pendant) == 12
    assert separation_bound_check(pendant, range(9))
    with pytest.raises(TypeError):
        separation_bound_check(g, {4})


@pytest.mark.order(152)
@pytest.mark.parametrize(
    "g,width",
    [
        (Graph(), -1),
        (Graph.from_edges(3, []), 0),
        (Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), 1),
        (Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]), 2),
        (complete(4), 3),
        (Graph.from_edges(20, [(i, i + 1) for i in range(19)]), 1),
    ],
)
def test_treewidth_known_values(g, width):
    assert treewidth(g) == width


@pytest.mark.order(153)
def test_treewidth_of_named_graphs():
    petersen = nx.petersen_graph()
    assert treewidth(Graph.from_edges(10, petersen.edges())) == 4
    grid = nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 3))
    assert treewidth(Graph.from_edges(9, grid.edges())) == 3


@pytest.mark.order(154)
def test_treewidth_matches_oracle():
    for g in atlas(1, 7, every=4):
        assert treewidth(g) == oracle_treewidth(g)


@pytest.mark.order(155)
def test_treewidth_size_limit():
    grid = nx.convert_node_labels_to_integers(nx.grid_2d_graph(4, 5))
    g = Graph.from_edges(20, grid.edges())
    with pytest.raises(ValueError):
        treewidth(g)
    assert treewidth_at_most(g, 10)


@pytest.mark.order(156)
def test_pendant_on_path():
    g = read_graph("tests/data/pendant_path.txt")
    inst = PendantInstance(g, 1, 1, get_property("true"))
    assert pendant_solve_unbreakable(inst) == frozenset([0])
    whole = PendantInstance(g, 0, 1, get_property("connected"))
    assert pendant_solve_unbreakable(whole) == g.vertex_set
    assert pendant_solve_unbreakable(PendantInstance(g, 0, 0, get_property("true"))) is None
    assert pendant_check(inst, {0, 1})
    assert not pendant_check(inst, {1, 2})
    assert not pendant_check(inst, set())


@pytest.mark.order(157)
def test_pendant_rejects_set_properties():
    with pytest.raises(ValueError):
        PendantInstance(complete(3), 1, 1, get_property("even-set"))
    with pytest.raises(ValueError):
        PendantInstance(complete(3), -1, 1, get_property("true"))


@pytest.mark.order(158)
@pytest.mark.parametrize(
    "k,t,name",
    [(1, 1, "true"), (2, 1, "even-vertices"), (1, 2, "atleast3:connected-set"), (2, 0, "true")],
)
def test_pendant_matches_oracle(k, t, name):
    prop = get_property(name)
    for g in atlas(3, 7, every=5):
        inst = PendantInstance(g, k, t, prop)
        assert oracle_witnessing_separation(g, default_s_of_k(k), k + t) is None
        found = pendant_solve_unbreakable(inst)
        truth = oracle_pendant(inst)
        assert (found is None) == (truth is None)
        if found is not None:
            assert pendant_check(inst, found)
            assert separation_bound_check(inst, found)
