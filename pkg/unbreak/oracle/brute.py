"""Brute-force reference answers.

Everything here enumerates directly from the definitions and keeps its
own traversal, gluing and compatibility code. Graph and structure classes
are used only to hold data.
"""
from __future__ import annotations
from dataclasses import dataclass
from itertools import chain, combinations, permutations, product
import os
import time
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple
from scipy.special import comb
from ..framework.Boundaried import (
    BoundariedGraph,
    BoundariedStructure,
    Element,
    Kind,
    Structure,
    TypeSignature,
)
from ..framework.Graph import Graph, Separation
from ..framework.exceptions import BudgetExceededError

DEFAULT_MAX_VERTICES = 14
DEFAULT_MAX_SUBSETS = 5_000_000


def default_max_vertices() -> int:
    raw = os.environ.get("UNBREAK_BUDGET")
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"UNBREAK_BUDGET must be an integer, got {raw!r}.")
    if value < 0:
        raise ValueError(f"UNBREAK_BUDGET must be non-negative, got {value}.")
    return value


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_subsets: int = DEFAULT_MAX_SUBSETS
    timeout: Optional[float] = None

    def __post_init__(self):
        if self.max_vertices < 0 or self.max_subsets < 0:
            raise ValueError("Budget caps must be non-negative.")
        if self.timeout is not None and self.timeout <= 0:
            raise ValueError(f"timeout must be positive, got {self.timeout}.")

    @classmethod
    def from_env(cls, **kwargs) -> OracleBudget:
        return cls(max_vertices=default_max_vertices(), **kwargs)

    def check(self, n: int, subsets: int):
        if n > self.max_vertices:
            raise BudgetExceededError(
                f"{n} vertices exceed the oracle budget of {self.max_vertices}."
            )
        if subsets > self.max_subsets:
            raise BudgetExceededError(
                f"{subsets} candidates exceed the oracle budget of {self.max_subsets}."
            )
        return _Clock(self.timeout)


class _Clock:
    def __init__(self, timeout):
        self.deadline = None if timeout is None else time.monotonic() + timeout

    def tick(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceededError("Oracle timed out.")


def _adjacency(g: Graph) -> Dict[int, set]:
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def _component_ids(adj: Dict[int, set], removed=frozenset()) -> Dict[int, int]:
    comp = {}
    label = 0
    for start in sorted(adj):
        if start in removed or start in comp:
            continue
        comp[start] = label
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in removed and w not in comp:
                    comp[w] = label
                    queue.append(w)
        label += 1
    return comp


def _subsets(items: Sequence[int], max_size: int) -> Iterator[Tuple[int, ...]]:
    for size in range(min(max_size, len(items)) + 1):
        yield from combinations(items, size)


def _subset_count(n: int, max_size: int) -> int:
    return sum(int(comb(n, j, exact=True)) for j in range(min(max_size, n) + 1))


def oracle_witnessing_separation(
    g: Graph, s: int, c: int, budget: OracleBudget = OracleBudget()
) -> Optional[Separation]:
    """Separator Z of size <= c, then a union of components of G - Z on one side."""
    clock = budget.check(g.n, _subset_count(g.n, c))
    adj = _adjacency(g)
    for z in _subsets(g.vertices, c):
        clock.tick()
        removed = frozenset(z)
        comp = _component_ids(adj, removed)
        blocks: Dict[int, List[int]] = {}
        for v, i in comp.items():
            blocks.setdefault(i, []).append(v)
        rest = g.n - len(removed)
        reachable = {0: ()}
        for i in sorted(blocks):
            for total, chosen in list(reachable.items()):
                reachable.setdefault(total + len(blocks[i]), chosen + (i,))
        for total in sorted(reachable):
            if total > s and rest - total > s:
                side = frozenset(v for i in reachable[total] for v in blocks[i])
                return Separation(side | removed, g.vertex_set - side)
    return None


def oracle_breakable_by_assignment(
    g: Graph, s: int, c: int, budget: OracleBudget = OracleBudget()
) -> bool:
    """Every placement of each vertex in X only, Y only or both."""
    clock = budget.check(g.n, 3**g.n)
    vertices = g.vertices
    for placement in product((0, 1, 2), repeat=g.n):
        clock.tick()
        where = dict(zip(vertices, placement))
        if placement.count(2) > c or placement.count(0) <= s or placement.count(1) <= s:
            continue
        if all({where[u], where[v]} != {0, 1} for u, v in g.edges):
            return True
    return False


def _mwcu_ok(adj, terminals, related, removed) -> bool:
    comp = _component_ids(adj, frozenset(removed))
    return all(
        (comp[u] == comp[v]) == related(u, v) for u, v in combinations(sorted(terminals), 2)
    )


def oracle_mwcu(inst, budget: OracleBudget = OracleBudget()) -> Optional[FrozenSet[int]]:
    """First S outside the terminals, by size then lexicographically."""
    candidates = sorted(inst.graph.vertex_set - inst.terminals)
    clock = budget.check(inst.graph.n, _subset_count(len(candidates), inst.k))
    adj = _adjacency(inst.graph)
    block = {v: i for i, cls in enumerate(inst.classes) for v in cls}

    def related(u, v):
        return block[u] == block[v]

    for s in _subsets(candidates, inst.k):
        clock.tick()
        if _mwcu_ok(adj, inst.terminals, related, s):
            return frozenset(s)
    return None


def oracle_rbcu(inst, budget: OracleBudget = OracleBudget()) -> Optional[FrozenSet[int]]:
    g = inst.graph
    red_pairs = [g.edges[i] for i in sorted(inst.red_edges)]
    red_vertices = {v for pair in red_pairs for v in pair}
    candidates = sorted(g.vertex_set - red_vertices)
    clock = budget.check(g.n, _subset_count(len(candidates), inst.k))
    adj = {v: set() for v in g.vertices}
    for i, (u, v) in enumerate(g.edges):
        if i not in inst.red_edges and u != v:
            adj[u].add(v)
            adj[v].add(u)
    red_adj = {v: set() for v in g.vertices}
    for u, v in red_pairs:
        red_adj[u].add(v)
        red_adj[v].add(u)

    def related(u, v):
        return v in red_adj[u]

    for s in _subsets(candidates, inst.k):
        clock.tick()
        if _mwcu_ok(adj, red_vertices, related, s):
            return frozenset(s)
    return None


def oracle_connected_sets(g: Graph, query, budget: OracleBudget = OracleBudget()):
    if not g.has_vertex(query.root):
        raise ValueError(f"Root {query.root} is not in the graph.")
    others = [v for v in g.vertices if v != query.root]
    clock = budget.check(g.n, _subset_count(len(others), query.p - 1))
    adj = _adjacency(g)
    found = []
    for rest in _subsets(others, query.p - 1):
        clock.tick()
        u = frozenset(rest) | {query.root}
        sub = {v: adj[v] & u for v in u}
        if len(set(_component_ids(sub).values())) != 1:
            continue
        if len(set().union(*(adj[v] for v in u)) - u) <= query.q:
            found.append(u)
    return sorted(found, key=sorted)


def _elimination_width(edges: FrozenSet[FrozenSet[int]], remaining: FrozenSet[int], memo) -> int:
    if not remaining:
        return -1
    if remaining in memo:
        return memo[remaining]
    best = len(remaining) - 1
    for v in sorted(remaining):
        nbrs = {w for e in edges if v in e for w in e if w != v}
        filled = {e for e in edges if v not in e}
        filled |= {frozenset(p) for p in combinations(sorted(nbrs), 2)}
        best = min(best, max(len(nbrs), _elimination_width(frozenset(filled), remaining - {v}, memo)))
    memo[remaining] = best
    return best


def oracle_treewidth(g: Graph) -> int:
    """Best width over all elimination orders, by playing the elimination game."""
    edges = frozenset(frozenset(e) for e in g.edges if e[0] != e[1])
    return _elimination_width(edges, g.vertex_set, {})


def oracle_pendant(inst, budget: OracleBudget = OracleBudget()) -> Optional[FrozenSet[int]]:
    """Smallest qualifying U, by size then lexicographically."""
    g = inst.graph
    clock = budget.check(g.n, 2**g.n)
    adj = _adjacency(g)
    for u in _subsets(g.vertices, g.n):
        clock.tick()
        if not u:
            continue
        chosen = frozenset(u)
        sub = Graph(u, [(a, b) for a, b in g.edges if a in chosen and b in chosen])
        if len(set(_component_ids(_adjacency(sub)).values())) != 1:
            continue
        if len(set().union(*(adj[v] for v in chosen)) - chosen) > inst.k:
            continue
        if oracle_treewidth(sub) <= inst.t and inst.prop(Structure(sub)):
            return chosen
    return None


def _powerset(items):
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def _labeled_structures(signature: TypeSignature, c: int, bound: int) -> Iterator[BoundariedStructure]:
    """Every structure on vertex set 0..n-1, all edge subsets, n <= bound."""
    for n in range(bound + 1):
        pairs = list(combinations(range(n), 2))
        for chosen in _powerset(pairs):
            g = Graph(range(n), chosen)
            per_kind = []
            for kind in signature.element_kinds:
                if kind == Kind.VERTEX:
                    per_kind.append([Element.vertex(v) for v in range(n)] + [Element.star()])
                elif kind == Kind.EDGE:
                    per_kind.append([Element.edge(i) for i in range(g.m)] + [Element.star()])
                elif kind == Kind.VERTEX_SET:
                    per_kind.append([Element.vertex_set(x) for x in _powerset(range(n))])
                else:
                    per_kind.append([Element.edge_set(x) for x in _powerset(range(g.m))])
            for size in range(min(n, 2 * c) + 1):
                for where in combinations(range(n), size):
                    for labels in permutations(range(1, 2 * c + 1), size):
                        bgraph = BoundariedGraph(g, dict(zip(where, labels)))
                        for elements in product(*per_kind):
                            yield BoundariedStructure(bgraph, elements)


def _labeled_count(signature: TypeSignature, c: int, bound: int) -> int:
    total = 0
    for n in range(bound + 1):
        p = n * (n - 1) // 2
        for m in range(p + 1):
            graphs = int(comb(p, m, exact=True))
            per = 1
            for kind in signature.element_kinds:
                per *= {
                    Kind.VERTEX: n + 1,
                    Kind.EDGE: m + 1,
                    Kind.VERTEX_SET: 2**n,
                    Kind.EDGE_SET: 2**m,
                }[kind]
            labelings = sum(
                int(comb(n, j, exact=True)) * int(comb(2 * c, j, exact=True)) * _factorial(j)
                for j in range(min(n, 2 * c) + 1)
            )
            total += graphs * per * labelings
    return total


def _factorial(j: int) -> int:
    out = 1
    for i in range(2, j + 1):
        out *= i
    return out


def _label(a: BoundariedStructure, v: int) -> Optional[int]:
    return a.bgraph.label_of(v)


def _pairs_ok(x: Element, a: BoundariedStructure, y: Element, b: BoundariedStructure) -> bool:
    if x.kind == Kind.STAR:
        return y.kind in (Kind.VERTEX, Kind.EDGE)
    if y.kind == Kind.STAR:
        return x.kind in (Kind.VERTEX, Kind.EDGE)
    if x.kind != y.kind:
        return False
    if x.kind == Kind.VERTEX:
        return _label(a, x.value) is not None and _label(a, x.value) == _label(b, y.value)
    if x.kind == Kind.EDGE:
        ea = [_label(a, v) for v in a.graph.edges[x.value]]
        eb = [_label(b, v) for v in b.graph.edges[y.value]]
        return None not in ea and None not in eb and sorted(ea) == sorted(eb)
    return True


def _fits(a: BoundariedStructure, b: BoundariedStructure) -> bool:
    return len(a.elements) == len(b.elements) and all(
        _pairs_ok(x, a, y, b) for x, y in zip(a.elements, b.elements)
    )


def _join(a: BoundariedStructure, b: BoundariedStructure) -> Structure:
    """Union with equal labels identified; vertices renamed 0..N-1 in order of
    a's vertices then b's unmatched vertices."""
    names = {}
    for v in a.graph.vertices:
        names[("a", v)] = len(names)
    by_label = {label: v for v, label in a.labels.items()}
    for v in b.graph.vertices:
        label = _label(b, v)
        if label in by_label:
            names[("b", v)] = names[("a", by_label[label])]
        else:
            names[("b", v)] = len(set(names.values()))
    edges = [(names[("a", u)], names[("a", v)]) for u, v in a.graph.edges]
    offset = len(edges)
    edges += [(names[("b", u)], names[("b", v)]) for u, v in b.graph.edges]
    elements = []
    for x, y in zip(a.elements, b.elements):
        if x.kind == Kind.VERTEX:
            elements.append(Element.vertex(names[("a", x.value)]))
        elif x.kind == Kind.EDGE:
            elements.append(Element.edge(x.value))
        elif x.kind == Kind.VERTEX_SET:
            elements.append(
                Element.vertex_set(
                    {names[("a", v)] for v in x.value} | {names[("b", v)] for v in y.value}
                )
            )
        elif x.kind == Kind.EDGE_SET:
            elements.append(Element.edge_set(set(x.value) | {offset + e for e in y.value}))
        elif y.kind == Kind.VERTEX:
            elements.append(Element.vertex(names[("b", y.value)]))
        else:
            elements.append(Element.edge(offset + y.value))
    return Structure(Graph(range(len(set(names.values()))), edges), elements)


def oracle_equivalence(
    prop,
    c: int,
    universe_bound: int,
    context_bound: int,
    budget: OracleBudget = OracleBudget(),
) -> List[List[BoundariedStructure]]:
    """Classes of all labeled structures up to ``universe_bound`` vertices.

    Two structures share a class when they have the same labels, fit the same
    contexts and the property answers alike on every context they fit.
    """
    signature = prop.signature
    raw = _labeled_count(signature, c, universe_bound)
    contexts_raw = _labeled_count(signature, c, context_bound)
    clock = budget.check(max(universe_bound, context_bound), raw * max(contexts_raw, 1))
    contexts = list(_labeled_structures(signature, c, context_bound))
    classes: Dict[tuple, List[BoundariedStructure]] = {}
    for a in _labeled_structures(signature, c, universe_bound):
        clock.tick()
        profile = tuple(prop(_join(a, g)) if _fits(a, g) else None for g in contexts)
        classes.setdefault((tuple(sorted(a.label_set)), profile), []).append(a)
    return list(classes.values())
