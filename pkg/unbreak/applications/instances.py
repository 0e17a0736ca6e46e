"""Problem instances: multiway cut-uncut, its red-blue form, and pendant subgraphs."""
from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, FrozenSet, Iterable, List, Tuple
from ..framework.Boundaried import TypeSignature
from ..framework.Graph import Graph, remove_edges
from ..framework.exceptions import InputFileError
from ..framework.readwrite import _read_lines, parse_graph_lines
from ..finite_state.properties import Property

ScheduleFn = Callable[[int], int]


def default_s_of_k(k: int) -> int:
    return k + 2


def constant_schedule(s: int) -> ScheduleFn:
    return lambda k: s


@dataclass(frozen=True, eq=False)
class MwcuInstance:
    """Delete at most k non-terminals so that two terminals stay connected
    exactly when they share a class."""

    graph: Graph
    terminals: FrozenSet[int]
    classes: Tuple[FrozenSet[int], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        classes = tuple(
            sorted((frozenset(cls) for cls in self.classes), key=lambda cls: min(cls, default=-1))
        )
        object.__setattr__(self, "classes", classes)
        self.graph.check_vertices(self.terminals)
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}.")
        seen = set()
        for cls in classes:
            if not cls:
                raise ValueError("Terminal classes must be nonempty.")
            if cls & seen:
                raise ValueError(f"Terminals {sorted(cls & seen)} appear in two classes.")
            seen |= cls
        if seen != self.terminals:
            raise ValueError("Terminal classes must partition the terminal set exactly.")

    def related(self, u: int, v: int) -> bool:
        return any(u in cls and v in cls for cls in self.classes)


def _cliques(graph: Graph, red_edges: FrozenSet[int]) -> List[FrozenSet[int]]:
    parent = {}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for idx in red_edges:
        for v in graph.edges[idx]:
            parent.setdefault(v, v)
    for idx in red_edges:
        u, v = graph.edges[idx]
        parent[find(u)] = find(v)
    blocks = {}
    for v in parent:
        blocks.setdefault(find(v), set()).add(v)
    return sorted((frozenset(b) for b in blocks.values()), key=min)


@dataclass(frozen=True, eq=False)
class RbcuInstance:
    """Graph with red edges forming disjoint cliques; a red self-loop marks a
    one-vertex clique."""

    graph: Graph
    red_edges: FrozenSet[int]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "red_edges", frozenset(self.red_edges))
        bad = [i for i in self.red_edges if not 0 <= i < self.graph.m]
        if bad:
            raise ValueError(f"Red edge indices {sorted(bad)} are not in the graph.")
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}.")
        red_pairs = {self.graph.edges[i] for i in self.red_edges}
        for clique in self.cliques:
            for u, v in combinations(sorted(clique), 2):
                if (u, v) not in red_pairs:
                    raise ValueError(
                        f"Red edges do not form a cluster graph: {u} and {v} share a "
                        "red component but no red edge."
                    )

    @cached_property
    def cliques(self) -> List[FrozenSet[int]]:
        """Red cliques ordered by smallest vertex."""
        return _cliques(self.graph, self.red_edges)

    @cached_property
    def red_vertices(self) -> FrozenSet[int]:
        return frozenset().union(*self.cliques)

    @cached_property
    def clique_of(self):
        return {v: j for j, clique in enumerate(self.cliques) for v in clique}

    @cached_property
    def blue_graph(self) -> Graph:
        return remove_edges(self.graph, self.red_edges)

    def related(self, u: int, v: int) -> bool:
        j = self.clique_of.get(u)
        return j is not None and j == self.clique_of.get(v)


@dataclass(frozen=True, eq=False)
class PendantInstance:
    graph: Graph
    k: int
    t: int
    prop: Property

    def __post_init__(self):
        if self.k < 0 or self.t < 0:
            raise ValueError(f"k and t must be non-negative, got k={self.k}, t={self.t}.")
        if self.prop.signature != TypeSignature.of():
            raise ValueError(f"{self.prop.name} is not a property of graphs alone.")


def _terminal_lines(extras, path) -> Tuple[List[int], List[List[int]]]:
    terminals, classes = [], []
    for lineno, tokens in extras:
        try:
            ids = [int(tok) for tok in tokens[1:]]
        except ValueError:
            raise InputFileError(f"Expected integers after '{tokens[0]}'.", path, lineno)
        if tokens[0] == "t":
            if len(ids) != 1:
                raise InputFileError("Terminal line must read 't <vertex>'.", path, lineno)
            if ids[0] in terminals:
                raise InputFileError(f"Terminal {ids[0]} declared twice.", path, lineno)
            terminals.append(ids[0])
        else:
            if not ids:
                raise InputFileError("Class line must list at least one vertex.", path, lineno)
            classes.append((lineno, ids))
    return terminals, classes


def parse_mwcu_lines(lines: Iterable[str], k: int, path=None) -> MwcuInstance:
    """Graph lines plus ``t <v>`` terminals and ``r <v1> <v2> ...`` classes.

    Terminals not named by any class form singleton classes.
    """
    graph, extras = parse_graph_lines(lines, path, extra_keys=("t", "r"))
    terminals, class_lines = _terminal_lines(extras, path)
    terminal_set = set(terminals)
    classes = []
    covered = set()
    for lineno, ids in class_lines:
        outside = [v for v in ids if v not in terminal_set]
        if outside:
            raise InputFileError(f"Class vertices {outside} are not terminals.", path, lineno)
        if covered & set(ids):
            raise InputFileError(
                f"Terminals {sorted(covered & set(ids))} are in two classes.", path, lineno
            )
        covered |= set(ids)
        classes.append(frozenset(ids))
    classes += [frozenset([v]) for v in terminals if v not in covered]
    try:
        return MwcuInstance(graph, frozenset(terminals), tuple(classes), k)
    except ValueError as exc:
        raise InputFileError(str(exc), path, None)


def read_mwcu(path: str, k: int) -> MwcuInstance:
    return parse_mwcu_lines(_read_lines(path), k, path)
