"""Find a small separation with two large sides or certify that none exists.

For c >= 1 the search combines two strategies driven by universal sets.
With a witnessing separation (X, Y) of order at most c, either both sides
contain a connected piece larger than s/2, which a minimum vertex cut
between two zero-components recovers, or one side splits into small
components, which can be grouped by their common neighborhood in the
separator. For c = 0 the question is a subset sum over component sizes
and is answered exactly.
"""
from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache, partial
import logging
import multiprocessing
from typing import Callable, FrozenSet, Iterable, Optional
import numpy as np
from networkx.algorithms.connectivity import minimum_st_node_cut
import networkx as nx
from ..framework.Graph import (
    BreakParams,
    Graph,
    Separation,
    connected_components,
    induced_subgraph,
    is_witnessing_at,
    neighborhood,
)
from ..framework.exceptions import InternalFaultError, NoDisjointCutError
from ..universal import cached_universal_set

error = logging.critical
warn = logging.warning
debug = logging.debug
info = logging.info

_SOURCE = "source"
_SINK = "sink"


@dataclass(frozen=True)
class BreakOutcome:
    s: int
    c: int
    witness: Optional[Separation] = None
    source: str = ""

    @property
    def unbreakable(self) -> bool:
        return self.witness is None

    @property
    def threshold(self) -> int:
        """Side-size threshold a witness is guaranteed to exceed."""
        return self.s >> self.c


def min_vertex_cut(g: Graph, a: Iterable[int], b: Iterable[int]) -> FrozenSet[int]:
    """Smallest vertex set avoiding ``a`` and ``b`` that separates them.

    Both sides are contracted to single terminals and the cut is read off a
    unit vertex-capacity max flow.
    """
    a, b = g.check_vertices(a), g.check_vertices(b)
    if not a or not b:
        raise NoDisjointCutError("Both terminal sets must be nonempty.")
    if a & b:
        raise NoDisjointCutError(f"Terminal sets share vertices {sorted(a & b)}.")
    terminal = {v: _SOURCE for v in a}
    terminal.update({v: _SINK for v in b})
    h = nx.Graph()
    h.add_nodes_from([_SOURCE, _SINK])
    h.add_nodes_from(v for v in g.vertices if v not in terminal)
    for u, v in g.edges:
        tu, tv = terminal.get(u, u), terminal.get(v, v)
        if {tu, tv} == {_SOURCE, _SINK}:
            raise NoDisjointCutError(f"Edge ({u}, {v}) joins the terminal sets.")
        if tu != tv:
            h.add_edge(tu, tv)
    return frozenset(minimum_st_node_cut(h, _SOURCE, _SINK))


@lru_cache(maxsize=None)
def _covering_rows(n: int, k: int, c: int, seed: int) -> np.ndarray:
    """Vectors with ones on any <= c chosen and zeros on any k - (ones) others."""
    k = min(k, n)
    blocks = [
        cached_universal_set(n, k, ones, seed).functions
        for ones in range(min(c, k) + 1)
    ]
    rows = np.vstack(blocks)
    _, first = np.unique(rows, axis=0, return_index=True)
    rows = rows[np.sort(first)]
    rows.flags.writeable = False
    return rows


def _first_in_order(func: Callable, rows: np.ndarray, jobs: int):
    """First non-None result in family order."""
    if jobs <= 1:
        for row in rows:
            found = func(row)
            if found is not None:
                return found
        return None
    with multiprocessing.Pool(jobs) as pool:
        for found in pool.imap(func, list(rows), chunksize=8):
            if found is not None:
                pool.terminate()
                return found
    return None


def _zero_components(g: Graph, row):
    zeros = [v for v, bit in zip(g.vertices, row) if bit == 0]
    return connected_components(induced_subgraph(g, zeros))


def _large_for_function(g: Graph, s: int, c: int, row) -> Optional[Separation]:
    large = s // 2 + 1
    comps = [comp for comp in _zero_components(g, row) if len(comp) >= large]
    for i, first in enumerate(comps):
        for second in comps[i + 1 :]:
            cut = min_vertex_cut(g, first, second)
            if len(cut) > c:
                continue
            anchor = min(first)
            side = next(
                comp
                for comp in connected_components(induced_subgraph(g, g.vertex_set - cut))
                if anchor in comp
            )
            sep = Separation(side | cut, g.vertex_set - side)
            if is_witnessing_at(g, sep, large - 1, c):
                return sep
    return None


def find_witness_large_components(
    g: Graph, s: int, c: int, seed: int = 0, jobs: int = 1
) -> Optional[Separation]:
    """Separation of order <= c with both sides above ⌊s/2⌋, found through
    a cut between two large zero-components, or None."""
    BreakParams(s, c)
    large = s // 2 + 1
    if g.n < 2 * large:
        return None
    rows = _covering_rows(g.n, 2 * large + c, c, seed)
    return _first_in_order(partial(_large_for_function, g, s, c), rows, jobs)


def _small_for_function(g: Graph, s: int, c: int, row) -> Optional[Separation]:
    small = s // 2
    cap = (3 * s) // 2
    threshold = s >> c
    groups = {}
    for comp in _zero_components(g, row):
        if len(comp) <= small:
            groups.setdefault(neighborhood(g, comp), []).append(comp)
    for common in sorted(groups, key=lambda nbrs: (len(nbrs), sorted(nbrs))):
        if len(common) > c:
            continue
        members = list(groups[common])
        total = sum(len(comp) for comp in members)
        while total > cap:
            largest = max(members, key=lambda comp: (len(comp), -min(comp)))
            members.remove(largest)
            total -= len(largest)
        if total <= threshold:
            continue
        group = frozenset().union(*members)
        sep = Separation(group | common, g.vertex_set - group)
        if is_witnessing_at(g, sep, threshold, c):
            return sep
    return None


def find_witness_small_components(
    g: Graph, s: int, c: int, seed: int = 0, jobs: int = 1
) -> Optional[Separation]:
    """Separation of order <= c with both sides above ⌊s/2^c⌋, formed by
    small components sharing one neighborhood, or None."""
    BreakParams(s, c)
    if g.n < 2 * s:
        return None
    rows = _covering_rows(g.n, (3 * s) // 2 + c, c, seed)
    return _first_in_order(partial(_small_for_function, g, s, c), rows, jobs)


def split_components(g: Graph, s: int) -> Optional[Separation]:
    """Order-0 separation with both sides above ``s``, by subset sum."""
    comps = connected_components(g)
    reachable = {0: ()}
    for i, comp in enumerate(comps):
        for total, chosen in list(reachable.items()):
            reachable.setdefault(total + len(comp), chosen + (i,))
    for total in sorted(reachable):
        if total > s and g.n - total > s:
            side = frozenset().union(*(comps[i] for i in reachable[total]))
            return Separation(side, g.vertex_set - side)
    return None


def break_alg(g: Graph, s: int, c: int, seed: int = 0, jobs: int = 1) -> BreakOutcome:
    BreakParams(s, c)
    if c == 0:
        sep, source = split_components(g, s), "component-split"
    else:
        sep, source = find_witness_large_components(g, s, c, seed, jobs), "large-components"
        if sep is None:
            sep = find_witness_small_components(g, s, c, seed, jobs)
            source = "small-components"
    if sep is None:
        debug(f"No witness on {g}; certified ({s},{c})-unbreakable.")
        return BreakOutcome(s, c)
    if not is_witnessing_at(g, sep, s >> c, c):
        raise InternalFaultError(
            f"{source} produced {sep}, which does not witness threshold {s >> c}."
        )
    debug(f"Witness on {g} from {source}: {sep}.")
    return BreakOutcome(s, c, sep, source)
