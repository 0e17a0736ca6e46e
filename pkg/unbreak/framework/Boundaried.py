"""Boundaried graphs and structures, compatibility and gluing."""
from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Tuple,
    Union,
)
from .Graph import Graph
from .exceptions import IncompatibleStructuresError


class Kind(Enum):
    GRAPH = "graph"
    VERTEX = "vertex"
    EDGE = "edge"
    VERTEX_SET = "vset"
    EDGE_SET = "eset"
    STAR = "star"

    @property
    def is_set(self) -> bool:
        return self in (Kind.VERTEX_SET, Kind.EDGE_SET)

    @property
    def is_single(self) -> bool:
        return self in (Kind.VERTEX, Kind.EDGE)


class Element(NamedTuple):
    """One entry of a structure after the graph.

    ``value`` is a vertex id, an edge index, a frozenset of either, or None for the placeholder.
    """

    kind: Kind
    value: Union[int, FrozenSet[int], None]

    @classmethod
    def vertex(cls, v: int) -> Element:
        return cls(Kind.VERTEX, int(v))

    @classmethod
    def edge(cls, idx: int) -> Element:
        return cls(Kind.EDGE, int(idx))

    @classmethod
    def vertex_set(cls, vs: Iterable[int] = ()) -> Element:
        return cls(Kind.VERTEX_SET, frozenset(int(v) for v in vs))

    @classmethod
    def edge_set(cls, es: Iterable[int] = ()) -> Element:
        return cls(Kind.EDGE_SET, frozenset(int(e) for e in es))

    @classmethod
    def star(cls) -> Element:
        return cls(Kind.STAR, None)

    def __repr__(self):
        if self.kind == Kind.STAR:
            return "★"
        if self.kind.is_set:
            return f"{self.kind.value}{sorted(self.value)}"
        return f"{self.kind.value}({self.value})"


@dataclass(frozen=True)
class TypeSignature:
    kinds: Tuple[Kind, ...]

    def __post_init__(self):
        object.__setattr__(self, "kinds", tuple(self.kinds))
        if not self.kinds or self.kinds[0] != Kind.GRAPH:
            raise ValueError("The first kind of a type signature must be graph.")

    @classmethod
    def of(cls, *kinds: Kind) -> TypeSignature:
        return cls((Kind.GRAPH,) + tuple(kinds))

    @property
    def arity(self) -> int:
        return len(self.kinds)

    @property
    def element_kinds(self) -> Tuple[Kind, ...]:
        return self.kinds[1:]

    def admits(self, other: TypeSignature) -> bool:
        """True when a structure of type ``other`` fits this signature; ★ may
        stand in for a vertex or an edge."""
        if self.arity != other.arity:
            return False
        return all(
            mine == theirs or (theirs == Kind.STAR and mine in (Kind.VERTEX, Kind.EDGE))
            for mine, theirs in zip(self.kinds, other.kinds)
        )

    def __str__(self):
        return ",".join(k.value for k in self.kinds)


def _check_element(graph: Graph, el: Element, allow_star: bool) -> Element:
    if not isinstance(el, Element):
        raise ValueError(f"{el!r} is not a structure element.")
    if el.kind == Kind.STAR:
        if not allow_star:
            raise ValueError("Placeholder elements are only allowed in boundaried structures.")
        return el
    if el.kind == Kind.GRAPH:
        raise ValueError("Only the first entry of a structure is a graph.")
    if el.kind == Kind.VERTEX:
        graph.check_vertices([el.value])
    elif el.kind == Kind.VERTEX_SET:
        graph.check_vertices(el.value)
    else:
        indices = [el.value] if el.kind == Kind.EDGE else el.value
        bad = [e for e in indices if not 0 <= e < graph.m]
        if bad:
            raise ValueError(f"Edge indices {sorted(bad)} are not in the graph.")
    return el


class BoundariedGraph:
    """Graph with an injectively labeled boundary."""

    def __init__(self, graph: Graph, labels: Optional[Mapping[int, int]] = None):
        labels = dict(labels) if labels is not None else {}
        graph.check_vertices(labels.keys())
        for v, label in labels.items():
            if isinstance(label, bool) or not isinstance(label, int) or label < 1:
                raise ValueError(f"Label of vertex {v} must be a positive integer.")
        if len(set(labels.values())) != len(labels):
            raise ValueError("Boundary labels must be injective.")
        self.graph = graph
        self._labels = {v: labels[v] for v in sorted(labels)}
        self._by_label = {label: v for v, label in self._labels.items()}

    @property
    def labels(self) -> Dict[int, int]:
        return dict(self._labels)

    @property
    def boundary(self) -> FrozenSet[int]:
        return frozenset(self._labels)

    @property
    def label_set(self) -> FrozenSet[int]:
        return frozenset(self._by_label)

    def label_of(self, v: int) -> Optional[int]:
        return self._labels.get(v)

    def vertex_with_label(self, label: int) -> Optional[int]:
        return self._by_label.get(label)

    def is_boundary_edge(self, idx: int) -> bool:
        u, v = self.graph.edges[idx]
        return u in self._labels and v in self._labels

    def edge_labels(self, idx: int) -> Tuple[int, int]:
        u, v = self.graph.edges[idx]
        return tuple(sorted((self._labels[u], self._labels[v])))

    def __eq__(self, other):
        return (
            isinstance(other, BoundariedGraph)
            and self.graph == other.graph
            and self._labels == other._labels
        )

    def __hash__(self):
        return hash((self.graph, tuple(self._labels.items())))

    def __repr__(self):
        return f"BoundariedGraph({self.graph!r}, labels={self._labels})"


class Structure:
    """A graph followed by vertices, edges, vertex sets and edge sets."""

    def __init__(self, graph: Graph, elements: Iterable[Element] = ()):
        self.graph = graph
        self.elements = tuple(_check_element(graph, el, False) for el in elements)

    @property
    def arity(self) -> int:
        return 1 + len(self.elements)

    @property
    def type_signature(self) -> TypeSignature:
        return TypeSignature.of(*(el.kind for el in self.elements))

    def __getitem__(self, i: int):
        """1-based access; index 1 is the graph."""
        if i == 1:
            return self.graph
        return self.elements[i - 2]

    def __eq__(self, other):
        return (
            isinstance(other, Structure)
            and self.graph == other.graph
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.graph, self.elements))

    def __repr__(self):
        return f"Structure({self.graph!r}, {list(self.elements)})"


class BoundariedStructure:
    def __init__(self, bgraph: BoundariedGraph, elements: Iterable[Element] = ()):
        self.bgraph = bgraph
        self.elements = tuple(
            _check_element(bgraph.graph, el, True) for el in elements
        )

    @classmethod
    def from_structure(
        cls, structure: Structure, labels: Optional[Mapping[int, int]] = None
    ) -> BoundariedStructure:
        return cls(BoundariedGraph(structure.graph, labels), structure.elements)

    @property
    def graph(self) -> Graph:
        return self.bgraph.graph

    @property
    def n(self) -> int:
        return self.bgraph.graph.n

    @property
    def labels(self) -> Dict[int, int]:
        return self.bgraph.labels

    @property
    def boundary(self) -> FrozenSet[int]:
        return self.bgraph.boundary

    @property
    def label_set(self) -> FrozenSet[int]:
        return self.bgraph.label_set

    @property
    def arity(self) -> int:
        return 1 + len(self.elements)

    @property
    def type_signature(self) -> TypeSignature:
        return TypeSignature.of(*(el.kind for el in self.elements))

    def to_structure(self) -> Structure:
        return Structure(self.graph, self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, BoundariedStructure)
            and self.bgraph == other.bgraph
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.bgraph, self.elements))

    def __repr__(self):
        return f"BoundariedStructure({self.bgraph!r}, {list(self.elements)})"


class GlueResult(NamedTuple):
    graph: Graph
    a_vertices: Dict[int, int]
    b_vertices: Dict[int, int]
    a_edges: List[int]
    b_edges: List[int]


def glue_graphs(a: BoundariedGraph, b: BoundariedGraph) -> GlueResult:
    """Disjoint union with equally labeled boundary vertices identified.

    Vertices of ``a`` keep their ids; the remaining vertices of ``b`` get
    fresh ids above those of ``a`` in ascending order. Edges of ``a`` come
    first, then those of ``b``, with multiplicity.
    """
    a_vertices = {v: v for v in a.graph.vertices}
    next_id = (a.graph.vertices[-1] + 1) if a.graph.n else 0
    b_vertices = {}
    for v in b.graph.vertices:
        label = b.label_of(v)
        partner = a.vertex_with_label(label) if label is not None else None
        if partner is not None:
            b_vertices[v] = partner
        else:
            b_vertices[v] = next_id
            next_id += 1
    edges = list(a.graph.edges)
    a_edges = list(range(a.graph.m))
    b_edges = []
    for u, v in b.graph.edges:
        b_edges.append(len(edges))
        edges.append((b_vertices[u], b_vertices[v]))
    vertices = sorted(set(a_vertices.values()) | set(b_vertices.values()))
    return GlueResult(Graph(vertices, edges), a_vertices, b_vertices, a_edges, b_edges)


def _single_compatible(
    x: Element, bx: BoundariedGraph, y: Element, by: BoundariedGraph
) -> bool:
    if x.kind == Kind.STAR and y.kind == Kind.STAR:
        return False
    if x.kind == Kind.STAR:
        return y.kind.is_single
    if y.kind == Kind.STAR:
        return x.kind.is_single
    if x.kind != y.kind:
        return False
    if x.kind == Kind.VERTEX:
        lx, ly = bx.label_of(x.value), by.label_of(y.value)
        return lx is not None and lx == ly
    if x.kind == Kind.EDGE:
        if not (bx.is_boundary_edge(x.value) and by.is_boundary_edge(y.value)):
            return False
        return bx.edge_labels(x.value) == by.edge_labels(y.value)
    return True


def compatible(a: BoundariedStructure, b: BoundariedStructure) -> bool:
    if a.arity != b.arity:
        return False
    return all(
        _single_compatible(x, a.bgraph, y, b.bgraph)
        for x, y in zip(a.elements, b.elements)
    )


def compatibility_key(a: BoundariedStructure) -> Tuple:
    """Everything that decides which structures ``a`` is compatible with.

    Two structures with equal keys are compatible with exactly the same
    structures and have equal label sets.
    """
    per_index = []
    for el in a.elements:
        if el.kind == Kind.VERTEX:
            detail = a.bgraph.label_of(el.value)
        elif el.kind == Kind.EDGE:
            detail = (
                a.bgraph.edge_labels(el.value)
                if a.bgraph.is_boundary_edge(el.value)
                else None
            )
        else:
            detail = None
        per_index.append((el.kind.value, detail))
    return (tuple(sorted(a.label_set)), tuple(per_index))


def _map_element(el: Element, vmap: Dict[int, int], emap: List[int]) -> Element:
    if el.kind == Kind.VERTEX:
        return Element.vertex(vmap[el.value])
    if el.kind == Kind.EDGE:
        return Element.edge(emap[el.value])
    if el.kind == Kind.VERTEX_SET:
        return Element.vertex_set(vmap[v] for v in el.value)
    if el.kind == Kind.EDGE_SET:
        return Element.edge_set(emap[e] for e in el.value)
    return el


def glue_structures(a: BoundariedStructure, b: BoundariedStructure) -> Structure:
    if not compatible(a, b):
        raise IncompatibleStructuresError(
            f"Cannot glue incompatible structures of types "
            f"{a.type_signature} and {b.type_signature}."
        )
    glued = glue_graphs(a.bgraph, b.bgraph)
    elements = []
    for x, y in zip(a.elements, b.elements):
        mx = _map_element(x, glued.a_vertices, glued.a_edges)
        my = _map_element(y, glued.b_vertices, glued.b_edges)
        if mx.kind == Kind.STAR:
            elements.append(my)
        elif my.kind == Kind.STAR or mx.kind.is_single:
            # paired single elements carry equal labels, so the a-side image
            # names the identified vertex or the a-copy of the boundary edge
            elements.append(mx)
        else:
            elements.append(Element(mx.kind, mx.value | my.value))
    return Structure(glued.graph, elements)


def append(
    s: Union[Structure, BoundariedStructure],
    x: Iterable[int],
    kind: Kind = Kind.VERTEX_SET,
):
    """Structure ``s`` with the set ``x`` added as its last element."""
    if not kind.is_set:
        raise ValueError(f"Only vertex sets and edge sets can be appended, got {kind.value}.")
    el = Element(kind, frozenset(int(v) for v in x))
    _check_element(s.graph, el, False)
    if isinstance(s, BoundariedStructure):
        return BoundariedStructure(s.bgraph, s.elements + (el,))
    return Structure(s.graph, s.elements + (el,))


def empty_context(signature: TypeSignature) -> BoundariedStructure:
    """Empty graph with ★ for single kinds and ∅ for sets."""
    elements = []
    for kind in signature.element_kinds:
        if kind.is_set:
            elements.append(Element(kind, frozenset()))
        else:
            elements.append(Element.star())
    return BoundariedStructure(BoundariedGraph(Graph()), elements)
