"""Exhaustive enumeration of small boundaried structures."""
from __future__ import annotations
from itertools import chain, combinations, permutations, product
import logging
from typing import Dict, Iterator, List, Sequence
import networkx as nx
from scipy.special import comb, perm
from ..framework.Boundaried import (
    BoundariedGraph,
    BoundariedStructure,
    Element,
    Kind,
    TypeSignature,
)
from ..framework.Graph import Graph
from ..framework.canonical import canonical_code
from ..framework.exceptions import BudgetExceededError

error = logging.critical
warn = logging.warning
debug = logging.debug
info = logging.info

MAX_UNIVERSE_VERTICES = 6
MAX_BOUNDARY_HALF = 2
DEFAULT_MAX_STRUCTURES = 300_000


def check_bounds(c: int, bound: int):
    if c < 0 or bound < 0:
        raise ValueError("c and the vertex bound must be non-negative.")
    if bound > MAX_UNIVERSE_VERTICES or c > MAX_BOUNDARY_HALF:
        raise BudgetExceededError(
            f"Exhaustive enumeration is limited to {MAX_UNIVERSE_VERTICES} vertices "
            f"and c <= {MAX_BOUNDARY_HALF}; got bound {bound}, c {c}."
        )


def atlas_graphs(bound: int) -> List[Graph]:
    """Simple graphs on at most ``bound`` vertices, one per isomorphism class."""
    graphs = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() > bound:
            break
        graphs.append(Graph(h.nodes, sorted(tuple(sorted(e)) for e in h.edges)))
    return graphs


def _labelings(n: int, n_labels: int) -> Iterator[Dict[int, int]]:
    labels = range(1, n_labels + 1)
    for size in range(min(n, n_labels) + 1):
        for chosen in combinations(range(n), size):
            for assigned in permutations(labels, size):
                yield dict(zip(chosen, assigned))


def _labeling_count(n: int, n_labels: int) -> int:
    return sum(
        int(comb(n, j, exact=True)) * int(perm(n_labels, j, exact=True))
        for j in range(min(n, n_labels) + 1)
    )


def _powerset(items: Sequence[int]):
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def _choices(g: Graph, kind: Kind) -> List[Element]:
    if kind == Kind.VERTEX:
        return [Element.vertex(v) for v in g.vertices] + [Element.star()]
    if kind == Kind.EDGE:
        return [Element.edge(i) for i in range(g.m)] + [Element.star()]
    if kind == Kind.VERTEX_SET:
        return [Element.vertex_set(vs) for vs in _powerset(g.vertices)]
    if kind == Kind.EDGE_SET:
        return [Element.edge_set(es) for es in _powerset(range(g.m))]
    raise ValueError(f"Kind {kind.value} cannot be an element.")


def _choice_count(g: Graph, kind: Kind) -> int:
    if kind == Kind.VERTEX:
        return g.n + 1
    if kind == Kind.EDGE:
        return g.m + 1
    return 2 ** (g.n if kind == Kind.VERTEX_SET else g.m)


def raw_structure_count(signature: TypeSignature, c: int, bound: int) -> int:
    """Number of (graph, labeling, elements) combinations before deduplication."""
    total = 0
    for g in atlas_graphs(bound):
        count = _labeling_count(g.n, 2 * c)
        for kind in signature.element_kinds:
            count *= _choice_count(g, kind)
        total += count
    return total


def iter_raw_structures(
    signature: TypeSignature, c: int, bound: int
) -> Iterator[BoundariedStructure]:
    """Every labeled structure over the atlas graphs, duplicates included."""
    for g in atlas_graphs(bound):
        per_kind = [_choices(g, kind) for kind in signature.element_kinds]
        for labels in _labelings(g.n, 2 * c):
            bgraph = BoundariedGraph(g, labels)
            for elements in product(*per_kind):
                yield BoundariedStructure(bgraph, elements)


def enumerate_structures(
    signature: TypeSignature,
    c: int,
    bound: int,
    max_structures: int = DEFAULT_MAX_STRUCTURES,
) -> List[BoundariedStructure]:
    """One structure per isomorphism class, up to ``bound`` vertices and labels in [2c]."""
    check_bounds(c, bound)
    raw = raw_structure_count(signature, c, bound)
    if raw > max_structures:
        raise BudgetExceededError(
            f"Enumerating {signature} with c={c} up to {bound} vertices visits {raw} "
            f"structures, over the budget of {max_structures}."
        )
    seen = {}
    for a in iter_raw_structures(signature, c, bound):
        seen.setdefault(canonical_code(a), a)
    debug(f"{raw} raw structures of type {signature} collapse to {len(seen)}.")
    return list(seen.values())
