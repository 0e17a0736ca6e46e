from __future__ import annotations
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple
import numpy as np
import networkx as nx

Edge = Tuple[int, int]


class Graph:
    """Immutable multigraph with non-negative integer vertex ids.

    Edges are kept in insertion order; the position of an edge in
    ``edges`` is its stable index, which structures use to refer to it.
    Parallel edges and self-loops are allowed.
    """

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[Edge] = (),
    ):
        vertex_list = [self._as_id(v) for v in vertices]
        vertex_set = frozenset(vertex_list)
        if len(vertex_set) != len(vertex_list):
            raise ValueError("Vertex ids must be unique.")
        self._vertices = tuple(sorted(vertex_set))
        self._vertex_set = vertex_set
        edge_list = []
        for u, v in edges:
            u, v = self._as_id(u), self._as_id(v)
            if u not in vertex_set or v not in vertex_set:
                raise ValueError(f"Edge ({u}, {v}) references a vertex not in the graph.")
            edge_list.append((u, v) if u <= v else (v, u))
        self._edges = tuple(edge_list)
        self._adjacency = None

    @staticmethod
    def _as_id(v) -> int:
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            raise ValueError(f"Vertex id {v!r} is not an integer.")
        if v < 0:
            raise ValueError(f"Vertex id {v} is negative.")
        return int(v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        """Graph on vertices 0..n-1."""
        return cls(range(n), edges)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> FrozenSet[int]:
        return self._vertex_set

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        """Distinct neighbors of each vertex; self-loops are ignored."""
        if self._adjacency is None:
            adj = {v: set() for v in self._vertices}
            for u, v in self._edges:
                if u != v:
                    adj[u].add(v)
                    adj[v].add(u)
            self._adjacency = {v: frozenset(nbrs) for v, nbrs in adj.items()}
        return self._adjacency

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def has_vertex(self, v: int) -> bool:
        return v in self._vertex_set

    def check_vertices(self, u: Iterable[int]) -> FrozenSet[int]:
        u = frozenset(u)
        foreign = u - self._vertex_set
        if foreign:
            raise ValueError(f"Vertices {sorted(foreign)} are not in the graph.")
        return u

    def to_networkx(self, multigraph: bool = False) -> nx.Graph:
        """Simple graph view by default; self-loops are dropped."""
        if multigraph:
            h = nx.MultiGraph()
            h.add_nodes_from(self._vertices)
            for idx, (u, v) in enumerate(self._edges):
                h.add_edge(u, v, key=idx)
            return h
        h = nx.Graph()
        h.add_nodes_from(self._vertices)
        h.add_edges_from((u, v) for u, v in self._edges if u != v)
        return h

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return False
        return self._vertices == other._vertices and sorted(self._edges) == sorted(
            other._edges
        )

    def __hash__(self):
        return hash((self._vertices, tuple(sorted(self._edges))))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Separation:
    x_side: FrozenSet[int]
    y_side: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "x_side", frozenset(self.x_side))
        object.__setattr__(self, "y_side", frozenset(self.y_side))

    @property
    def separator(self) -> FrozenSet[int]:
        return self.x_side & self.y_side

    @property
    def order(self) -> int:
        return len(self.separator)

    @property
    def x_only(self) -> FrozenSet[int]:
        return self.x_side - self.y_side

    @property
    def y_only(self) -> FrozenSet[int]:
        return self.y_side - self.x_side

    def swapped(self) -> Separation:
        return Separation(self.y_side, self.x_side)

    def __repr__(self):
        return (
            f"Separation(X={sorted(self.x_side)}, Y={sorted(self.y_side)}, "
            f"order={self.order})"
        )


@dataclass(frozen=True)
class BreakParams:
    s: int
    c: int

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"s must be positive, got {self.s}.")
        if self.c < 0:
            raise ValueError(f"c must be non-negative, got {self.c}.")


def is_separation(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    x = g.check_vertices(x)
    y = g.check_vertices(y)
    if x | y != g.vertex_set:
        return False
    x_only = x - y
    y_only = y - x
    for u, v in g.edges:
        if (u in x_only and v in y_only) or (u in y_only and v in x_only):
            return False
    return True


def is_witnessing_at(g: Graph, sep: Separation, threshold: int, c: int) -> bool:
    """Like ``is_witnessing`` but accepts any non-negative side threshold."""
    if not is_separation(g, sep.x_side, sep.y_side):
        raise ValueError(f"{sep} is not a separation of {g}.")
    return (
        sep.order <= c and len(sep.x_only) > threshold and len(sep.y_only) > threshold
    )


def is_witnessing(g: Graph, sep: Separation, p: BreakParams) -> bool:
    return is_witnessing_at(g, sep, p.s, p.c)


def connected_components(g: Graph) -> List[FrozenSet[int]]:
    """Blocks ordered by their smallest vertex id."""
    blocks = [frozenset(b) for b in nx.connected_components(g.to_networkx())]
    return sorted(blocks, key=min)


def subgraph_with_edge_map(
    g: Graph, u: Iterable[int], drop_edges: Optional[Iterable[int]] = None
) -> Tuple[Graph, Dict[int, int]]:
    """Induced subgraph plus the map from old to new edge indices."""
    u = g.check_vertices(u)
    dropped = frozenset(drop_edges) if drop_edges is not None else frozenset()
    kept = []
    edge_map = {}
    for idx, (a, b) in enumerate(g.edges):
        if a in u and b in u and idx not in dropped:
            edge_map[idx] = len(kept)
            kept.append((a, b))
    return Graph(sorted(u), kept), edge_map


def induced_subgraph(g: Graph, u: Iterable[int]) -> Graph:
    return subgraph_with_edge_map(g, u)[0]


def remove_vertices(g: Graph, s: Iterable[int]) -> Graph:
    return induced_subgraph(g, g.vertex_set - g.check_vertices(s))


def remove_edges(g: Graph, indices: Iterable[int]) -> Graph:
    return subgraph_with_edge_map(g, g.vertex_set, drop_edges=indices)[0]


def neighborhood(g: Graph, u: Iterable[int], closed: bool = False) -> FrozenSet[int]:
    u = g.check_vertices(u)
    nbrs = set()
    for v in u:
        nbrs.update(g.neighbors(v))
    if closed:
        return frozenset(nbrs | u)
    return frozenset(nbrs - u)
