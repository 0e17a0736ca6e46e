"""Canonical forms of boundaried structures.

The code is the lexicographically smallest encoding over all vertex
orderings that respect a color refinement, so two structures share a code
exactly when a label- and element-preserving isomorphism maps one onto the
other. Beyond ``MAX_CANONICAL_VERTICES`` a Weisfeiler-Lehman hash is used
instead; equal hashes then do not imply isomorphism.
"""
from __future__ import annotations
from itertools import permutations, product
from typing import Dict, List, Tuple
import networkx as nx
from .Boundaried import BoundariedGraph, BoundariedStructure, Element, Kind
from .Graph import Graph

MAX_CANONICAL_VERTICES = 10


def _edge_membership(a: BoundariedStructure, idx: int) -> Tuple[int, ...]:
    member = []
    for i, el in enumerate(a.elements):
        if (el.kind == Kind.EDGE and el.value == idx) or (
            el.kind == Kind.EDGE_SET and idx in el.value
        ):
            member.append(i)
    return tuple(member)


def _vertex_membership(a: BoundariedStructure, v: int) -> Tuple[int, ...]:
    member = []
    for i, el in enumerate(a.elements):
        if (el.kind == Kind.VERTEX and el.value == v) or (
            el.kind == Kind.VERTEX_SET and v in el.value
        ):
            member.append(i)
    return tuple(member)


def _refined_cells(a: BoundariedStructure) -> List[List[int]]:
    g = a.graph
    memberships = [_edge_membership(a, idx) for idx in range(g.m)]
    incident = {v: [] for v in g.vertices}
    for idx, (u, v) in enumerate(g.edges):
        incident[u].append((v, memberships[idx]))
        if u != v:
            incident[v].append((u, memberships[idx]))
    invariant = {
        v: (
            a.bgraph.label_of(v) or 0,
            _vertex_membership(a, v),
            tuple(sorted((w == v, mem) for w, mem in incident[v])),
        )
        for v in g.vertices
    }
    color = _ranks(invariant)
    while True:
        signature = {
            v: (color[v], tuple(sorted((color[w], mem) for w, mem in incident[v])))
            for v in g.vertices
        }
        refined = _ranks(signature)
        if len(set(refined.values())) == len(set(color.values())):
            break
        color = refined
    cells: Dict[int, List[int]] = {}
    for v in g.vertices:
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _ranks(keys: Dict[int, tuple]) -> Dict[int, int]:
    order = {key: rank for rank, key in enumerate(sorted(set(keys.values())))}
    return {v: order[key] for v, key in keys.items()}


def _encode(a: BoundariedStructure, pos: Dict[int, int], memberships) -> tuple:
    g = a.graph
    edges = tuple(
        sorted(
            tuple(sorted((pos[u], pos[v]))) + (memberships[idx],)
            for idx, (u, v) in enumerate(g.edges)
        )
    )
    labels = tuple(sorted((pos[v], label) for v, label in a.labels.items()))
    elements = []
    for el in a.elements:
        if el.kind == Kind.VERTEX:
            elements.append((el.kind.value, (pos[el.value],)))
        elif el.kind == Kind.VERTEX_SET:
            elements.append((el.kind.value, tuple(sorted(pos[v] for v in el.value))))
        elif el.kind == Kind.EDGE:
            u, v = g.edges[el.value]
            elements.append((el.kind.value, tuple(sorted((pos[u], pos[v])))))
        elif el.kind == Kind.EDGE_SET:
            elements.append((el.kind.value, (len(el.value),)))
        else:
            elements.append((el.kind.value, ()))
    return (g.n, labels, edges, tuple(elements))


def _best_order(a: BoundariedStructure) -> Tuple[tuple, Dict[int, int]]:
    memberships = [_edge_membership(a, idx) for idx in range(a.graph.m)]
    cells = _refined_cells(a)
    best_code, best_pos = None, None
    for choice in product(*(permutations(cell) for cell in cells)):
        order = [v for cell in choice for v in cell]
        pos = {v: i for i, v in enumerate(order)}
        code = _encode(a, pos, memberships)
        if best_code is None or code < best_code:
            best_code, best_pos = code, pos
    return best_code, best_pos


def canonical_form(a: BoundariedStructure) -> BoundariedStructure:
    """Copy of ``a`` on vertices 0..n-1 in canonical order."""
    if a.n > MAX_CANONICAL_VERTICES:
        raise ValueError(
            f"Canonical forms are exact only up to {MAX_CANONICAL_VERTICES} vertices."
        )
    _, pos = _best_order(a)
    g = a.graph
    memberships = [_edge_membership(a, idx) for idx in range(g.m)]
    keyed = sorted(
        range(g.m),
        key=lambda idx: tuple(sorted((pos[g.edges[idx][0]], pos[g.edges[idx][1]])))
        + (memberships[idx],),
    )
    new_index = {old: new for new, old in enumerate(keyed)}
    edges = [(pos[g.edges[old][0]], pos[g.edges[old][1]]) for old in keyed]
    graph = Graph(range(g.n), edges)
    labels = {pos[v]: label for v, label in a.labels.items()}
    elements = []
    for el in a.elements:
        if el.kind == Kind.VERTEX:
            elements.append(Element.vertex(pos[el.value]))
        elif el.kind == Kind.VERTEX_SET:
            elements.append(Element.vertex_set(pos[v] for v in el.value))
        elif el.kind == Kind.EDGE:
            elements.append(Element.edge(new_index[el.value]))
        elif el.kind == Kind.EDGE_SET:
            elements.append(Element.edge_set(new_index[e] for e in el.value))
        else:
            elements.append(el)
    return BoundariedStructure(BoundariedGraph(graph, labels), elements)


def _hash_code(a: BoundariedStructure) -> bytes:
    g = a.graph
    h = nx.Graph()
    for v in g.vertices:
        h.add_node(v, tag=f"{a.bgraph.label_of(v) or 0}|{_vertex_membership(a, v)}")
    for idx, (u, v) in enumerate(g.edges):
        tag = f"{_edge_membership(a, idx)}"
        if h.has_edge(u, v):
            tag = "+".join(sorted([h.edges[u, v]["tag"], tag]))
        h.add_edge(u, v, tag=tag)
    digest = nx.weisfeiler_lehman_graph_hash(h, node_attr="tag", edge_attr="tag")
    kinds = ",".join(el.kind.value for el in a.elements)
    return f"H{g.n}:{g.m}:{kinds}:{digest}".encode()


def canonical_code(a: BoundariedStructure) -> bytes:
    cached = getattr(a, "_canonical_code", None)
    if cached is not None:
        return cached
    if a.n > MAX_CANONICAL_VERTICES:
        code = _hash_code(a)
    else:
        code = b"C" + repr(_best_order(a)[0]).encode()
    a._canonical_code = code
    return code
