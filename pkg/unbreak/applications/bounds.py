"""Size bounds that unbreakability forces on solutions.

Used to check solver output; a breakable graph can violate them.
"""
from __future__ import annotations
from functools import singledispatch
from typing import Optional
from ..framework.Graph import connected_components, remove_vertices
from .instances import MwcuInstance, PendantInstance, RbcuInstance, ScheduleFn, default_s_of_k
from .mwcu import mwcu_to_rbcu
from .pendant import pendant_size_bound


@singledispatch
def separation_bound_check(inst, solution, s_of_k: Optional[ScheduleFn] = None) -> bool:
    raise TypeError(f"No size bound is known for {type(inst).__name__}.")


@separation_bound_check.register(RbcuInstance)
def _(inst: RbcuInstance, solution, s_of_k: Optional[ScheduleFn] = None) -> bool:
    """At most one component holding red vertices exceeds s(k) vertices."""
    s = (s_of_k or default_s_of_k)(inst.k)
    comps = connected_components(remove_vertices(inst.blue_graph, solution))
    large = [c for c in comps if c & inst.red_vertices and len(c) > s]
    return len(large) <= 1


@separation_bound_check.register(MwcuInstance)
def _(inst: MwcuInstance, solution, s_of_k: Optional[ScheduleFn] = None) -> bool:
    return separation_bound_check(mwcu_to_rbcu(inst)[0], solution, s_of_k)


@separation_bound_check.register(PendantInstance)
def _(inst: PendantInstance, solution, s_of_k: Optional[ScheduleFn] = None) -> bool:
    return len(frozenset(solution)) < pendant_size_bound(inst, s_of_k)
