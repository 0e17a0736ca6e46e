"""Executable graph properties with declared free-variable signatures."""
from __future__ import annotations
from dataclasses import dataclass
from itertools import combinations
import re
from typing import Callable, Dict, FrozenSet, Iterable, List
from ..framework.Boundaried import Element, Kind, Structure, TypeSignature
from ..framework.Graph import Graph


@dataclass(frozen=True)
class Property:
    name: str
    signature: TypeSignature
    predicate: Callable[[Structure], bool]
    description: str = ""

    def matches(self, structure: Structure) -> bool:
        kinds = structure.type_signature.kinds
        return kinds[: self.signature.arity] == self.signature.kinds

    def __call__(self, structure: Structure) -> bool:
        if not self.matches(structure):
            return False
        return bool(self.predicate(structure))


def _reachable(graph: Graph, start: int, allowed: FrozenSet[int] = None) -> set:
    adj = graph.adjacency
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen and (allowed is None or w in allowed):
                seen.add(w)
                stack.append(w)
    return seen


def _even_vertices(s: Structure) -> bool:
    return s.graph.n % 2 == 0


def _connected(s: Structure) -> bool:
    g = s.graph
    return g.n == 0 or len(_reachable(g, g.vertices[0])) == g.n


def _connected_pair(s: Structure) -> bool:
    u, v = s.elements[0].value, s.elements[1].value
    return v in _reachable(s.graph, u)


def _even_set(s: Structure) -> bool:
    return len(s.elements[0].value) % 2 == 0


def _connected_set(s: Structure) -> bool:
    chosen = s.elements[0].value
    if not chosen:
        return False
    return len(_reachable(s.graph, min(chosen), chosen)) == len(chosen)


PROPERTIES: Dict[str, Property] = {
    prop.name: prop
    for prop in [
        Property(
            "even-vertices",
            TypeSignature.of(),
            _even_vertices,
            "The graph has an even number of vertices.",
        ),
        Property(
            "connected",
            TypeSignature.of(),
            _connected,
            "The graph is connected; the empty graph counts as connected.",
        ),
        Property(
            "connected-pair",
            TypeSignature.of(Kind.VERTEX, Kind.VERTEX),
            _connected_pair,
            "The two vertex elements lie in one connected component.",
        ),
        Property(
            "even-set",
            TypeSignature.of(Kind.VERTEX_SET),
            _even_set,
            "The vertex-set element has even size.",
        ),
        Property(
            "connected-set",
            TypeSignature.of(Kind.VERTEX_SET),
            _connected_set,
            "The vertex-set element is nonempty and induces a connected subgraph.",
        ),
        Property("true", TypeSignature.of(), lambda s: True, "Always true."),
    ]
}

CARDINALITY_MODES = ("atmost", "atleast", "exactly")
_CARDINALITY_NAME = re.compile(r"(atmost|atleast|exactly)(\d+):(.+)")


def _sizes(mode: str, k: int, n: int) -> Iterable[int]:
    if mode == "atmost":
        return range(0, min(k, n) + 1)
    if mode == "atleast":
        return range(k, n + 1)
    return range(k, k + 1) if k <= n else range(0)


def cardinality_property(base: Property, mode: str, k: int) -> Property:
    """Arity-1 property: some vertex set S of the given size bound satisfies ``base(G, S)``."""
    if base.signature != TypeSignature.of(Kind.VERTEX_SET):
        raise ValueError(f"{base.name} does not take a single vertex-set element.")
    if mode not in CARDINALITY_MODES:
        raise ValueError(f"Unknown mode {mode!r}; choose from {CARDINALITY_MODES}.")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}.")

    def predicate(s: Structure) -> bool:
        g = s.graph
        for size in _sizes(mode, k, g.n):
            for chosen in combinations(g.vertices, size):
                if base(Structure(g, [Element.vertex_set(chosen)])):
                    return True
        return False

    return Property(
        f"{mode}{k}:{base.name}",
        TypeSignature.of(),
        predicate,
        f"Some vertex set of size {mode} {k} satisfies {base.name}.",
    )


def get_property(name: str) -> Property:
    if name in PROPERTIES:
        return PROPERTIES[name]
    matched = _CARDINALITY_NAME.fullmatch(name)
    if matched and matched.group(3) in PROPERTIES:
        mode, k, base = matched.groups()
        return cardinality_property(PROPERTIES[base], mode, int(k))
    raise ValueError(
        f"Unknown property {name!r}. Available: {', '.join(list_properties())}, "
        f"or <{'|'.join(CARDINALITY_MODES)}><k>:<set property>."
    )


def list_properties() -> List[str]:
    return sorted(PROPERTIES)
