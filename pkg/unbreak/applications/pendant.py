from __future__ import annotations
import logging
from typing import FrozenSet, Optional
from ..enumeration.connected_sets import ConnectedSetQuery, enum_connected_sets
from ..framework.Boundaried import Structure
from ..framework.Graph import connected_components, induced_subgraph, neighborhood
from .instances import PendantInstance, ScheduleFn, default_s_of_k
from .treewidth import treewidth_at_most

error = logging.critical
warn = logging.warning
debug = logging.debug
info = logging.info


def pendant_size_bound(inst: PendantInstance, s_of_k: Optional[ScheduleFn] = None) -> int:
    """Sets strictly smaller than this suffice on unbreakable graphs."""
    s_of_k = s_of_k or default_s_of_k
    return 3 * (s_of_k(inst.k) + inst.t)


def pendant_check(inst: PendantInstance, u) -> bool:
    u = frozenset(u)
    g = inst.graph
    if not u or not u <= g.vertex_set:
        return False
    sub = induced_subgraph(g, u)
    return (
        len(connected_components(sub)) == 1
        and len(neighborhood(g, u)) <= inst.k
        and treewidth_at_most(sub, inst.t)
        and inst.prop(Structure(sub))
    )


def pendant_solve_unbreakable(
    inst: PendantInstance, s_of_k: Optional[ScheduleFn] = None
) -> Optional[FrozenSet[int]]:
    """First qualifying set over roots in ascending order, on a graph that is
    (s(k), k + t)-unbreakable."""
    g = inst.graph
    p = pendant_size_bound(inst, s_of_k) - 1
    for root in g.vertices:
        for u in enum_connected_sets(g, ConnectedSetQuery(root, p, inst.k)):
            if _qualifies(inst, u):
                debug(f"Root {root} gives {sorted(u)}.")
                return u
    return None


def _qualifies(inst: PendantInstance, u: FrozenSet[int]) -> bool:
    sub = induced_subgraph(inst.graph, u)
    return treewidth_at_most(sub, inst.t) and inst.prop(Structure(sub))
