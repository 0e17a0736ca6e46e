"""Vertex multiway cut-uncut through its red-blue form, on unbreakable graphs.

On an (s(k), k)-unbreakable graph all but at most one of the components
holding red cliques in a solution have at most s(k) vertices. Those small
components are connected sets with at most k neighbors, so the branching
only ever needs the bounded enumeration of such sets around each clique.
"""
from __future__ import annotations
from dataclasses import dataclass
from itertools import combinations
import logging
from typing import Dict, FrozenSet, List, Optional, Tuple
from ..enumeration.connected_sets import ConnectedSetQuery, enum_connected_sets
from ..framework.Graph import Graph, connected_components, neighborhood, remove_vertices
from ..framework.exceptions import InternalFaultError
from .instances import MwcuInstance, RbcuInstance, ScheduleFn, default_s_of_k

error = logging.critical
warn = logging.warning
debug = logging.debug
info = logging.info


def mwcu_to_rbcu(inst: MwcuInstance) -> Tuple[RbcuInstance, Dict[int, Tuple[int, int]]]:
    """Red edge for every related terminal pair, a red self-loop for each
    singleton class. Returns the instance and the inserted edges by index."""
    edges = list(inst.graph.edges)
    red = []
    inserted = {}
    for cls in inst.classes:
        members = sorted(cls)
        pairs = [(members[0], members[0])] if len(members) == 1 else combinations(members, 2)
        for u, v in pairs:
            inserted[len(edges)] = (u, v)
            red.append(len(edges))
            edges.append((u, v))
    rbcu = RbcuInstance(Graph(inst.graph.vertices, edges), frozenset(red), inst.k)
    return rbcu, inserted


def rbcu_check(inst: RbcuInstance, solution) -> bool:
    s = frozenset(solution)
    if not s <= inst.graph.vertex_set or len(s) > inst.k or s & inst.red_vertices:
        return False
    comp_of = {}
    for i, comp in enumerate(connected_components(remove_vertices(inst.blue_graph, s))):
        for v in comp:
            comp_of[v] = i
    red = sorted(inst.red_vertices)
    return all(
        (comp_of[u] == comp_of[v]) == inst.related(u, v) for u, v in combinations(red, 2)
    )


def candidate_sets(inst: RbcuInstance, j: int, p: int) -> List[FrozenSet[int]]:
    """Connected blue sets that could be the component of clique j: they hold
    the whole clique, no other red vertex, and no red neighbor."""
    clique = inst.cliques[j]
    blue = inst.blue_graph
    query = ConnectedSetQuery(min(clique), p, inst.k)
    others = inst.red_vertices - clique
    return [
        u
        for u in enum_connected_sets(blue, query)
        if clique <= u and not u & others and not neighborhood(blue, u) & inst.red_vertices
    ]


@dataclass
class BranchStats:
    calls: int = 0
    max_depth: int = 0


class _Brancher:
    def __init__(self, inst: RbcuInstance, families, stats: BranchStats):
        self.inst = inst
        self.families = families
        self.stats = stats
        self.cliques = inst.cliques
        self.blue = inst.blue_graph

    def _violation(self, s: FrozenSet[int]):
        """(None, True) on a split clique, (pair, False) on a shared
        component, (None, False) when ``s`` separates every clique."""
        comp_of = {}
        for i, comp in enumerate(connected_components(remove_vertices(self.blue, s))):
            for v in comp:
                comp_of[v] = i
        owner = []
        for clique in self.cliques:
            comps = {comp_of[v] for v in clique}
            if len(comps) > 1:
                return None, True
            owner.append(comps.pop())
        for j, j2 in combinations(range(len(self.cliques)), 2):
            if owner[j] == owner[j2]:
                return (j, j2), False
        return None, False

    def branch(self, s: FrozenSet[int], large: Optional[int], depth: int):
        self.stats.calls += 1
        self.stats.max_depth = max(self.stats.max_depth, depth)
        if len(s) > self.inst.k:
            return None
        pair, split = self._violation(s)
        if split:
            return None
        if pair is None:
            return s
        j, j2 = pair
        if large is None:
            options = self.families[j] + [u for u in self.families[j2] if u not in self.families[j]]
        else:
            options = self.families[j2 if j == large else j]
        for u in options:
            if u & s:
                continue
            found = self.branch(s | neighborhood(self.blue, u), large, depth + 1)
            if found is not None:
                return found
        return None


def rbcu_solve_unbreakable(
    inst: RbcuInstance,
    s_of_k: Optional[ScheduleFn] = None,
    guess_large: bool = True,
    stats: Optional[BranchStats] = None,
) -> Optional[FrozenSet[int]]:
    """Solution of a red-blue instance whose graph is (s(k), k)-unbreakable.

    With ``guess_large`` the index of the possibly large component is guessed
    up front; otherwise each branching step takes the candidates of both
    cliques of a violating pair.
    """
    s_of_k = s_of_k or default_s_of_k
    p = s_of_k(inst.k)
    stats = stats if stats is not None else BranchStats()
    if not inst.cliques:
        return frozenset()
    families = [candidate_sets(inst, j, p) for j in range(len(inst.cliques))]
    debug(f"Candidate sets per clique: {[len(f) for f in families]}.")
    brancher = _Brancher(inst, families, stats)
    if guess_large:
        found = None
        for i in range(len(inst.cliques)):
            found = brancher.branch(frozenset(), i, 0)
            if found is not None:
                break
    else:
        found = brancher.branch(frozenset(), None, 0)
    debug(f"Branching made {stats.calls} calls, depth {stats.max_depth}.")
    if found is not None and not rbcu_check(inst, found):
        raise InternalFaultError(f"Branching returned {sorted(found)}, which is not a solution.")
    return found


def mwcu_solve_unbreakable(
    inst: MwcuInstance,
    s_of_k: Optional[ScheduleFn] = None,
    guess_large: bool = True,
    stats: Optional[BranchStats] = None,
) -> Optional[FrozenSet[int]]:
    rbcu, _ = mwcu_to_rbcu(inst)
    return rbcu_solve_unbreakable(rbcu, s_of_k, guess_large, stats)
