"""Recursive understanding: replace a structure by its class representative.

A structure that cannot be broken is matched against the table by its
answers on the compatible representatives. Otherwise a witnessing
separation splits it; the smaller-boundary side is understood
recursively, glued back in its shrunken form, and the result is
understood again.
"""
from __future__ import annotations
from dataclasses import dataclass
import logging
from typing import Dict, List, Mapping, Optional
from ..breaking.break_alg import break_alg
from ..framework.Boundaried import (
    BoundariedGraph,
    BoundariedStructure,
    Element,
    Kind,
    Structure,
    compatibility_key,
    empty_context,
    glue_structures,
)
from ..framework.Graph import Graph, Separation, is_separation, subgraph_with_edge_map
from ..framework.exceptions import InternalFaultError
from .classes import RepresentativeTable
from .properties import Property, cardinality_property

error = logging.critical
warn = logging.warning
debug = logging.debug
info = logging.info


class UnbreakableSolver:
    """Decides the property; only required to be right on unbreakable inputs.

    ``exact`` solvers are right on every input.
    """

    name = "solver"
    exact = False

    def __call__(self, structure: Structure) -> bool:
        raise NotImplementedError


class DirectSolver(UnbreakableSolver):
    exact = True

    def __init__(self, prop: Property):
        self.prop = prop
        self.name = f"direct:{prop.name}"

    def __call__(self, structure: Structure) -> bool:
        return self.prop(structure)


@dataclass(frozen=True)
class RecursionStep:
    depth: int
    n: int
    n_beta: int
    n_beta_rep: int
    n_gamma: int
    order: int
    budget: int
    c: int

    def __post_init__(self):
        if self.n_beta < self.budget >> self.c:
            raise InternalFaultError(
                f"X side of {self.n_beta} vertices is below the breaking threshold "
                f"{self.budget >> self.c}."
            )


def understand_unbreakable(
    a: BoundariedStructure, table: RepresentativeTable, solver: UnbreakableSolver
) -> BoundariedStructure:
    key = compatibility_key(a)
    candidates = table.candidates(key)
    if not candidates:
        raise InternalFaultError(
            f"No representative of {table.property_name} has the compatibility type of {a}."
        )
    tests = table.test_set(a)
    answers = tuple(solver(glue_structures(a, t)) for t in tests)
    matches = [
        cls
        for cls, row in zip(candidates, table.answer_matrix(a, solver))
        if row == answers
    ]
    if not matches:
        raise InternalFaultError(
            f"No representative of {table.property_name} answers like {a} on "
            f"{len(tests)} tests; the table or the solver is inconsistent."
        )
    if len(matches) > 1:
        warn(
            f"{len(matches)} representatives answer alike on {len(tests)} tests; "
            "the table's context bound may be too small."
        )
    return matches[0].representative


def _split_labels(a: BoundariedStructure, sep: Separation, c: int) -> Dict[int, int]:
    """Boundary labels of the X side: old labels kept, new separator vertices
    get the smallest labels in [2c] unused on X, in ascending vertex order."""
    labels = {v: label for v, label in a.labels.items() if v in sep.x_side}
    fresh = sorted(sep.separator - a.boundary)
    used = set(labels.values())
    free = [x for x in range(1, 2 * c + 1) if x not in used]
    if len(free) < len(fresh):
        raise InternalFaultError(
            f"{len(fresh)} separator vertices need fresh labels but only "
            f"{len(free)} of [1, {2 * c}] are unused."
        )
    labels.update(zip(fresh, free))
    return labels


def split_beta(a: BoundariedStructure, sep: Separation, c: int) -> BoundariedStructure:
    """The X side of ``sep`` as a boundaried structure."""
    if not is_separation(a.graph, sep.x_side, sep.y_side):
        raise ValueError(f"{sep} is not a separation of {a.graph}.")
    graph, edge_map = subgraph_with_edge_map(a.graph, sep.x_side)
    x = sep.x_side
    elements = []
    for el in a.elements:
        if el.kind == Kind.VERTEX:
            elements.append(el if el.value in x else Element.star())
        elif el.kind == Kind.EDGE:
            idx = edge_map.get(el.value)
            elements.append(Element.edge(idx) if idx is not None else Element.star())
        elif el.kind == Kind.VERTEX_SET:
            elements.append(Element.vertex_set(el.value & x))
        elif el.kind == Kind.EDGE_SET:
            elements.append(Element.edge_set(edge_map[e] for e in el.value if e in edge_map))
        else:
            elements.append(el)
    return BoundariedStructure(BoundariedGraph(graph, _split_labels(a, sep, c)), elements)


def _y_part(el: Element, y, edge_map: Mapping[int, int]) -> Optional[Element]:
    if el.kind == Kind.VERTEX:
        return el if el.value in y else None
    if el.kind == Kind.EDGE:
        return Element.edge(edge_map[el.value]) if el.value in edge_map else None
    if el.kind == Kind.VERTEX_SET:
        return Element.vertex_set(el.value & y)
    if el.kind == Kind.EDGE_SET:
        return Element.edge_set(edge_map[e] for e in el.value if e in edge_map)
    return None


def _image(el: Element, vmap: Mapping[int, int], emap: List[int]) -> Optional[Element]:
    if el.kind == Kind.VERTEX:
        return Element.vertex(vmap[el.value])
    if el.kind == Kind.EDGE:
        return Element.edge(emap[el.value])
    if el.kind == Kind.VERTEX_SET:
        return Element.vertex_set(vmap[v] for v in el.value)
    if el.kind == Kind.EDGE_SET:
        return Element.edge_set(emap[e] for e in el.value)
    return None


def rejoin_gamma(
    a: BoundariedStructure, beta_rep: BoundariedStructure, sep: Separation, c: int
) -> BoundariedStructure:
    """Replace the X side of ``a`` by ``beta_rep``.

    Boundary vertices of ``beta_rep`` are identified with the X-side vertices
    carrying the same split label; its other vertices get fresh ids above
    those of ``a``. The boundary of the result is the boundary of ``a``.
    """
    owner = {label: v for v, label in _split_labels(a, sep, c).items()}
    if beta_rep.label_set != frozenset(owner):
        raise InternalFaultError(
            f"Representative labels {sorted(beta_rep.label_set)} differ from the "
            f"split labels {sorted(owner)}."
        )
    g = a.graph
    next_id = g.vertices[-1] + 1 if g.n else 0
    vmap = {}
    for u in beta_rep.graph.vertices:
        label = beta_rep.bgraph.label_of(u)
        if label is not None:
            vmap[u] = owner[label]
        else:
            vmap[u] = next_id
            next_id += 1

    separator = sep.separator
    shared = [i for i, (u, v) in enumerate(g.edges) if u in separator and v in separator]
    y_graph, y_edges = subgraph_with_edge_map(g, sep.y_side, drop_edges=shared)
    edges = list(y_graph.edges)
    emap = []
    for u, v in beta_rep.graph.edges:
        emap.append(len(edges))
        edges.append((vmap[u], vmap[v]))
    vertices = sorted(set(sep.y_side) | set(vmap.values()))
    graph = Graph(vertices, edges)

    elements = []
    for i, (el, rep_el) in enumerate(zip(a.elements, beta_rep.elements)):
        y_part = _y_part(el, sep.y_side, y_edges)
        x_part = _image(rep_el, vmap, emap)
        if el.kind.is_set:
            value = (y_part.value if y_part else frozenset()) | (
                x_part.value if x_part else frozenset()
            )
            elements.append(Element(el.kind, value))
            continue
        present = [part for part in (y_part, x_part) if part is not None]
        if len(present) == 2 and present[0] != present[1]:
            raise InternalFaultError(
                f"Element {i + 2} resolves to {present[0]} on the Y side and "
                f"{present[1]} on the representative side."
            )
        elements.append(present[0] if present else Element.star())
    return BoundariedStructure(BoundariedGraph(graph, a.labels), elements)


@dataclass
class _Run:
    table: RepresentativeTable
    solver: UnbreakableSolver
    budget: int
    c: int
    seed: int
    jobs: int
    trace: Optional[List[RecursionStep]]


def _understand(a: BoundariedStructure, run: _Run, depth: int) -> BoundariedStructure:
    while True:
        if a.n < 2 * run.budget:
            return understand_unbreakable(a, run.table, run.solver)
        outcome = break_alg(a.graph, run.budget, run.c, run.seed, run.jobs)
        if outcome.unbreakable:
            return understand_unbreakable(a, run.table, run.solver)
        sep = outcome.witness
        if len(sep.x_side & a.boundary) > len(sep.y_side & a.boundary):
            sep = sep.swapped()
        beta = split_beta(a, sep, run.c)
        beta_rep = _understand(beta, run, depth + 1)
        if beta_rep.n >= beta.n:
            debug(f"Depth {depth}: representative does not shrink the X side; matching directly.")
            return understand_unbreakable(a, run.table, run.solver)
        gamma = rejoin_gamma(a, beta_rep, sep, run.c)
        debug(
            f"Depth {depth}: {a.n} vertices, X side {beta.n} -> {beta_rep.n}, "
            f"now {gamma.n} vertices."
        )
        if run.trace is not None:
            run.trace.append(
                RecursionStep(
                    depth, a.n, beta.n, beta_rep.n, gamma.n, sep.order, run.budget, run.c
                )
            )
        a = gamma


def understand(
    a: BoundariedStructure,
    table: RepresentativeTable,
    solver: UnbreakableSolver,
    s: int,
    c: int,
    seed: int = 0,
    jobs: int = 1,
    trace: Optional[List[RecursionStep]] = None,
) -> BoundariedStructure:
    """Representative of the class of ``a``.

    ``trace``, when given, collects one ``RecursionStep`` per replacement.
    """
    if c != table.c:
        raise ValueError(f"The table was built for c={table.c}, not c={c}.")
    if not table.signature.admits(a.type_signature):
        raise ValueError(
            f"Structure type {a.type_signature} does not match the table's {table.signature}."
        )
    if any(label > 2 * c for label in a.label_set):
        raise ValueError(f"Boundary labels must lie in [1, {2 * c}].")
    if s <= table.r:
        raise ValueError(f"s must exceed r = {table.r}, got {s}.")
    if s < table.schedule_s() and not solver.exact:
        warn(
            f"s = {s} is below {table.schedule_s()}; {solver.name} is only "
            "guaranteed on unbreakable inputs."
        )
    run = _Run(table, solver, s - table.r, c, seed, jobs, trace)
    return _understand(a, run, 0)


def solve_cmso(
    s0: Structure,
    table: RepresentativeTable,
    solver: UnbreakableSolver,
    s: int,
    c: int,
    seed: int = 0,
    jobs: int = 1,
    trace: Optional[List[RecursionStep]] = None,
) -> bool:
    rep = understand(
        BoundariedStructure.from_structure(s0), table, solver, s, c, seed, jobs, trace
    )
    return solver(glue_structures(rep, empty_context(rep.type_signature)))


def optimum_value(
    structure: Structure,
    base: Property,
    mode: str = "min",
    tables: Optional[Mapping[str, RepresentativeTable]] = None,
    s: Optional[int] = None,
    seed: int = 0,
) -> Optional[int]:
    """Smallest (``min``) or largest (``max``) size of a vertex set S with base(G, S).

    Each size is decided by a cardinality property, through ``solve_cmso``
    when ``tables`` holds a table under the property's name.
    """
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}.")
    n = structure.graph.n
    sizes = range(n + 1) if mode == "min" else range(n, -1, -1)
    wrapper = "atmost" if mode == "min" else "atleast"
    for k in sizes:
        prop = cardinality_property(base, wrapper, k)
        table = (tables or {}).get(prop.name)
        if table is None:
            holds = prop(structure)
        else:
            holds = solve_cmso(
                structure,
                table,
                DirectSolver(prop),
                s if s is not None else table.schedule_s(),
                table.c,
                seed,
            )
        if holds:
            return k
    return None
