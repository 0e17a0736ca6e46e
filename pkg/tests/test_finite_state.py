import networkx as nx
import numpy as np
import pytest
from unbreak.finite_state import (
    DirectSolver,
    RecursionStep,
    class_of,
    compute_classes,
    format_table,
    get_property,
    optimum_value,
    parse_table,
    rejoin_gamma,
    solve_cmso,
    split_beta,
    understand,
    understand_unbreakable,
)
from unbreak.finite_state.universe import enumerate_structures
from unbreak.framework import (
    BoundariedGraph,
    BoundariedStructure,
    BudgetExceededError,
    Element,
    Graph,
    InputFileError,
    InternalFaultError,
    Kind,
    Separation,
    Structure,
    TypeSignature,
    canonical_code,
    compatible,
    glue_structures,
    read_boundaried_structure,
)
from unbreak.oracle import oracle_equivalence


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def grid(rows, cols):
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def caterpillar():
    spine = [(i, i + 1) for i in range(6)]
    legs = [(i, 7 + i) for i in range(7)]
    return Graph.from_edges(14, spine + legs)


GRAPHS = [
    path(12),
    path(9),
    cycle(10),
    grid(3, 4),
    caterpillar(),
    Graph.from_edges(11, [(i, i + 1) for i in range(4)] + [(i, i + 1) for i in range(5, 10)]),
    Graph.from_edges(7, []),
]


@pytest.fixture(scope="module")
def parity_table():
    return compute_classes(get_property("even-vertices"), 1, 3, 3)


@pytest.fixture(scope="module")
def connected_table():
    return compute_classes(get_property("connected"), 1, 3, 3)


@pytest.fixture(scope="module")
def even_set_table():
    return compute_classes(get_property("even-set"), 1, 3, 2)


@pytest.fixture(scope="module")
def pair_table():
    return compute_classes(get_property("connected-pair"), 1, 2, 2)


@pytest.mark.order(100)
def test_properties():
    g = path(4)
    assert get_property("even-vertices")(Structure(g))
    assert get_property("connected")(Structure(g))
    assert get_property("connected")(Structure(Graph()))
    assert not get_property("connected")(Structure(Graph.from_edges(2, [])))
    pair = Structure(Graph.from_edges(4, [(0, 1)]), [Element.vertex(0), Element.vertex(1)])
    assert get_property("connected-pair")(pair)
    far = Structure(Graph.from_edges(4, [(0, 1)]), [Element.vertex(0), Element.vertex(3)])
    assert not get_property("connected-pair")(far)
    assert get_property("connected-set")(Structure(g, [Element.vertex_set([1, 2])]))
    assert not get_property("connected-set")(Structure(g, [Element.vertex_set([0, 2])]))
    assert not get_property("connected-set")(Structure(g, [Element.vertex_set([])]))
    assert get_property("even-set")(Structure(g, [Element.vertex_set([])]))


@pytest.mark.order(101)
def test_signature_mismatch_is_false():
    g = path(4)
    assert not get_property("even-set")(Structure(g))
    assert not get_property("connected-pair")(Structure(g, [Element.vertex(0)]))


@pytest.mark.order(102)
def test_cardinality_properties():
    prop = get_property("atmost2:connected-set")
    assert prop.name == "atmost2:connected-set"
    assert prop.signature == TypeSignature.of()
    assert prop(Structure(path(3)))
    assert not prop(Structure(Graph()))
    assert get_property("exactly3:connected-set")(Structure(path(3)))
    assert not get_property("exactly4:connected-set")(Structure(path(3)))
    assert get_property("atleast3:even-set")(Structure(path(4)))
    assert not get_property("atleast4:even-set")(Structure(path(3)))


@pytest.mark.order(103)
@pytest.mark.parametrize(
    "name", ["odd-vertices", "atmost2:connected", "most2:even-set", "atmostx:even-set"]
)
def test_unknown_property(name):
    with pytest.raises(ValueError):
        get_property(name)


@pytest.mark.order(104)
def test_enumeration_counts():
    assert len(enumerate_structures(TypeSignature.of(), 0, 3)) == 8
    assert len(enumerate_structures(TypeSignature.of(), 1, 1)) == 4
    with pytest.raises(BudgetExceededError):
        enumerate_structures(TypeSignature.of(), 1, 7)
    with pytest.raises(BudgetExceededError):
        enumerate_structures(TypeSignature.of(Kind.VERTEX_SET), 2, 6, max_structures=100)


@pytest.mark.order(105)
def test_parity_table_shape(parity_table):
    assert len(parity_table.classes) == 8
    assert parity_table.r == 3
    assert parity_table.schedule_s() == 15
    labels = sorted(cls.key[0] for cls in parity_table.classes)
    assert labels == sorted([(), (), (1,), (1,), (2,), (2,), (1, 2), (1, 2)])
    encodings = [cls.encoding for cls in parity_table.classes]
    assert encodings == sorted(encodings, key=lambda e: (len(e), e))


@pytest.mark.order(106)
def test_connected_table_shape(connected_table):
    assert len(connected_table.classes) == 10
    assert connected_table.r == 3


@pytest.mark.order(107)
def test_table_frame(parity_table):
    frame = parity_table.to_frame()
    assert len(frame) == 8
    assert list(frame.columns)[:3] == ["class", "labels", "elements"]
    assert frame["members"].sum() == len(
        enumerate_structures(TypeSignature.of(), 1, 3)
    )


def _matches_oracle(table, prop, c, ubound, cbound):
    oracle = oracle_equivalence(prop, c, ubound, cbound)
    assert len(oracle) == len(table.classes)
    reps = [canonical_code(cls.representative) for cls in table.classes]
    for members in oracle:
        codes = {canonical_code(a) for a in members}
        assert sum(code in codes for code in reps) == 1


@pytest.mark.order(108)
def test_parity_classes_match_oracle(parity_table):
    _matches_oracle(parity_table, get_property("even-vertices"), 1, 3, 3)


@pytest.mark.order(109)
@pytest.mark.parametrize(
    "name,ubound,cbound",
    [("connected", 3, 2), ("even-set", 2, 2), ("connected-set", 2, 2), ("connected-pair", 2, 2)],
)
def test_classes_match_oracle(name, ubound, cbound):
    prop = get_property(name)
    table = compute_classes(prop, 1, ubound, cbound)
    _matches_oracle(table, prop, 1, ubound, cbound)


@pytest.mark.order(110)
def test_parallel_classes_agree():
    prop = get_property("connected")
    serial = compute_classes(prop, 1, 3, 2)
    parallel = compute_classes(prop, 1, 3, 2, jobs=2)
    assert [cls.encoding for cls in serial.classes] == [
        cls.encoding for cls in parallel.classes
    ]
    assert [cls.vector for cls in serial.classes] == [
        cls.vector for cls in parallel.classes
    ]


@pytest.mark.order(111)
def test_table_text_round_trip(parity_table):
    parsed = parse_table(format_table(parity_table))
    assert parsed.property_name == "even-vertices"
    assert parsed.c == 1 and parsed.universe_bound == 3 and parsed.context_bound == 3
    assert [cls.encoding for cls in parsed.classes] == [
        cls.encoding for cls in parity_table.classes
    ]
    assert [cls.vector for cls in parsed.classes] == [
        cls.vector for cls in parity_table.classes
    ]
    assert parsed.r == parity_table.r


@pytest.mark.order(112)
def test_table_parse_errors(parity_table):
    text = format_table(parity_table)
    with pytest.raises(InputFileError):
        parse_table("not a table\n")
    with pytest.raises(InputFileError):
        parse_table(text.replace("classes 8", "classes 9"))
    with pytest.raises(InputFileError):
        parse_table(text.rsplit("end", 1)[0])
    with pytest.raises(InputFileError) as exc:
        parse_table(text.replace("c 1\n", "c one\n"))
    assert "integers" in str(exc.value)


@pytest.mark.order(113)
def test_class_of(parity_table):
    a = BoundariedStructure(BoundariedGraph(path(5)))
    i = class_of(parity_table, a, get_property("even-vertices"))
    rep = parity_table.classes[i].representative
    assert rep.n % 2 == 1
    assert rep.label_set == frozenset()


@pytest.mark.order(114)
def test_split_and_rejoin():
    a = read_boundaried_structure("tests/data/labeled_path.txt")
    sep = Separation({0, 1, 2}, {2, 3, 4})
    beta = split_beta(a, sep, 1)
    assert beta.graph.vertices == (0, 1, 2)
    assert beta.labels == {0: 1, 2: 2}
    rep = BoundariedStructure(BoundariedGraph(Graph.from_edges(2, [(0, 1)]), {0: 1, 1: 2}))
    gamma = rejoin_gamma(a, rep, sep, 1)
    assert gamma.graph.vertices == (0, 2, 3, 4)
    assert sorted(gamma.graph.edges) == [(0, 2), (2, 3), (3, 4)]
    assert gamma.labels == a.labels


@pytest.mark.order(115)
def test_split_keeps_elements_on_their_side():
    g = path(6)
    a = BoundariedStructure(
        BoundariedGraph(g),
        [Element.vertex(4), Element.vertex_set([0, 2, 5]), Element.edge(1)],
    )
    sep = Separation({0, 1, 2}, {2, 3, 4, 5})
    beta = split_beta(a, sep, 1)
    assert beta.elements[0] == Element.star()
    assert beta.elements[1] == Element.vertex_set([0, 2])
    assert beta.graph.edges[beta.elements[2].value] == (1, 2)
    assert beta.labels == {2: 1}
    with pytest.raises(ValueError):
        split_beta(a, Separation({0, 1}, {2, 3, 4, 5}), 1)


@pytest.mark.order(116)
def test_rejoin_rejects_foreign_labels():
    a = read_boundaried_structure("tests/data/labeled_path.txt")
    sep = Separation({0, 1, 2}, {2, 3, 4})
    rep = BoundariedStructure(BoundariedGraph(Graph.from_edges(1, []), {0: 1}))
    with pytest.raises(InternalFaultError):
        rejoin_gamma(a, rep, sep, 1)


@pytest.mark.order(117)
@pytest.mark.parametrize("g", GRAPHS)
def test_parity_through_replacement(parity_table, g):
    prop = get_property("even-vertices")
    assert solve_cmso(Structure(g), parity_table, DirectSolver(prop), 5, 1) == prop(
        Structure(g)
    )


@pytest.mark.order(118)
@pytest.mark.parametrize("g", GRAPHS)
def test_connectivity_through_replacement(connected_table, g):
    prop = get_property("connected")
    assert solve_cmso(Structure(g), connected_table, DirectSolver(prop), 5, 1) == prop(
        Structure(g)
    )


@pytest.mark.order(119)
@pytest.mark.parametrize(
    "g,chosen",
    [
        (path(12), [0, 3, 4, 7, 11]),
        (path(12), [1, 2, 5, 6]),
        (cycle(10), []),
        (caterpillar(), [7, 8, 9, 13]),
        (grid(3, 4), [0, 5, 10]),
    ],
)
def test_vertex_sets_through_replacement(even_set_table, g, chosen):
    prop = get_property("even-set")
    s0 = Structure(g, [Element.vertex_set(chosen)])
    assert solve_cmso(s0, even_set_table, DirectSolver(prop), 5, 1) == prop(s0)


@pytest.mark.order(120)
def test_trace_bookkeeping(parity_table):
    trace = []
    solver = DirectSolver(get_property("even-vertices"))
    solve_cmso(Structure(path(12)), parity_table, solver, 5, 1, trace=trace)
    assert trace
    for step in trace:
        assert isinstance(step, RecursionStep)
        assert step.n_beta_rep < step.n_beta
        assert step.n_gamma == step.n - step.n_beta + step.n_beta_rep
        assert step.order <= step.c == 1
        assert step.budget == 2
        assert step.budget >> step.c <= step.n_beta


@pytest.mark.order(121)
def test_understand_returns_table_representative(parity_table):
    a = read_boundaried_structure("tests/data/labeled_path.txt")
    rep = understand(a, parity_table, DirectSolver(get_property("even-vertices")), 5, 1)
    assert any(rep is cls.representative for cls in parity_table.classes)
    assert rep.label_set == frozenset([1, 2])
    assert rep.n % 2 == 1
    solver = DirectSolver(get_property("even-vertices"))
    assert understand_unbreakable(a, parity_table, solver) is rep


@pytest.mark.order(122)
def test_understand_validates_inputs(parity_table):
    solver = DirectSolver(get_property("even-vertices"))
    a = read_boundaried_structure("tests/data/labeled_path.txt")
    with pytest.raises(ValueError):
        understand(a, parity_table, solver, 5, 2)
    with pytest.raises(ValueError):
        understand(a, parity_table, solver, 3, 1)
    with pytest.raises(ValueError):
        high_label = BoundariedStructure(BoundariedGraph(path(3), {0: 3}))
        understand(high_label, parity_table, solver, 5, 1)
    with pytest.raises(ValueError):
        star = read_boundaried_structure("tests/data/star_sets.txt")
        understand(star, parity_table, solver, 5, 1)


@pytest.mark.order(123)
def test_optimum_value():
    base = get_property("connected-set")
    two_parts = Structure(Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)]))
    assert optimum_value(two_parts, base, "min") == 1
    assert optimum_value(two_parts, base, "max") == 3
    assert optimum_value(Structure(path(5)), get_property("even-set"), "max") == 4
    assert optimum_value(Structure(Graph()), base, "min") is None
    with pytest.raises(ValueError):
        optimum_value(two_parts, base, "mid")


@pytest.mark.order(124)
def test_optimum_value_through_tables():
    prop = get_property("atmost1:connected-set")
    tables = {prop.name: compute_classes(prop, 1, 3, 3)}
    value = optimum_value(Structure(path(9)), get_property("connected-set"), "min", tables, s=5)
    assert value == 1


@pytest.mark.order(125)
def test_signature_admits_star():
    pair = TypeSignature.of(Kind.VERTEX, Kind.VERTEX)
    assert pair.admits(TypeSignature.of(Kind.VERTEX, Kind.STAR))
    assert pair.admits(TypeSignature.of(Kind.STAR, Kind.STAR))
    assert TypeSignature.of(Kind.EDGE).admits(TypeSignature.of(Kind.STAR))
    assert not TypeSignature.of(Kind.VERTEX_SET).admits(TypeSignature.of(Kind.STAR))
    assert not pair.admits(TypeSignature.of(Kind.VERTEX))
    assert not pair.admits(TypeSignature.of(Kind.VERTEX, Kind.EDGE))


@pytest.mark.order(126)
def test_understand_starred_representatives(pair_table):
    prop = get_property("connected-pair")
    solver = DirectSolver(prop)
    starred = 0
    for i, cls in enumerate(pair_table.classes):
        rep = cls.representative
        starred += any(el.kind == Kind.STAR for el in rep.elements)
        out = understand(rep, pair_table, solver, pair_table.r + 2, 1)
        assert class_of(pair_table, out, prop) == i
    assert starred > 0
    parsed = parse_table(format_table(pair_table))
    assert [cls.encoding for cls in parsed.classes] == [
        cls.encoding for cls in pair_table.classes
    ]


@pytest.mark.order(127)
@pytest.mark.parametrize(
    "name",
    ["even-vertices", "connected", "connected-pair", "even-set", "connected-set", "true"],
)
def test_replacement_keeps_every_context(name):
    prop = get_property(name)
    table = compute_classes(prop, 1, 2, 2)
    solver = DirectSolver(prop)
    universe = enumerate_structures(prop.signature, 1, 2)
    for a in universe:
        rep = understand(a, table, solver, table.schedule_s(), 1)
        for context in universe:
            if compatible(a, context):
                assert prop(glue_structures(a, context)) == prop(
                    glue_structures(rep, context)
                ), f"{name}: {a} and {rep} differ on {context}"


SWEEP_BOUNDS = {
    "even-vertices": (3, 3),
    "connected": (3, 3),
    "connected-pair": (4, 2),
    "even-set": (3, 2),
    "connected-set": (4, 2),
    "true": (2, 2),
}


def random_structure(name, seed):
    rng = np.random.default_rng(seed)
    n = 8 + seed % 7
    h = nx.gnm_random_graph(n, n + seed % 4, seed=seed)
    g = Graph.from_edges(n, sorted(tuple(sorted(e)) for e in h.edges))
    if name == "connected-pair":
        u, v = rng.integers(n, size=2)
        return Structure(g, [Element.vertex(int(u)), Element.vertex(int(v))])
    if name == "connected-set" and seed % 2 == 0:
        v = int(rng.integers(n))
        return Structure(g, [Element.vertex_set([v, *h.neighbors(v)])])
    if name in ("even-set", "connected-set"):
        chosen = [v for v in range(n) if rng.random() < 0.4]
        return Structure(g, [Element.vertex_set(chosen)])
    return Structure(g)


@pytest.mark.order(128)
@pytest.mark.parametrize("name", list(SWEEP_BOUNDS))
def test_random_graphs_through_replacement(name):
    prop = get_property(name)
    table = compute_classes(prop, 1, *SWEEP_BOUNDS[name])
    solver = DirectSolver(prop)
    s = table.r + 3
    steps = 0
    for seed in range(40):
        s0 = random_structure(name, seed)
        trace = []
        assert solve_cmso(s0, table, solver, s, 1, seed=seed, trace=trace) == prop(s0), seed
        for step in trace:
            assert step.budget == s - table.r
            assert step.budget >> step.c <= step.n_beta
            assert step.n_beta_rep < step.n_beta
            assert step.n_gamma == step.n - step.n_beta + step.n_beta_rep
            assert step.order <= step.c
        steps += len(trace)
    assert steps > 0


@pytest.mark.order(129)
def test_recursion_step_rejects_small_x_side():
    RecursionStep(0, 12, 2, 1, 11, 1, 5, 1)
    with pytest.raises(InternalFaultError):
        RecursionStep(0, 12, 1, 1, 12, 1, 5, 1)
