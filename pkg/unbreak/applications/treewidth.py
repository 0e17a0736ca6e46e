"""Exact treewidth of small graphs."""
from __future__ import annotations
from networkx.algorithms.approximation import treewidth_min_degree
from ..framework.Graph import Graph

MAX_EXACT_VERTICES = 16


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _outside_reach(adj, inside: int, v: int) -> int:
    """Vertices outside ``inside`` and v reachable from v through ``inside``."""
    own = 1 << v
    reached = adj[v]
    frontier = reached & inside
    seen = frontier | own
    while frontier:
        step = 0
        for u in _bits(frontier):
            step |= adj[u]
        reached |= step
        frontier = step & inside & ~seen
        seen |= frontier
    return _popcount(reached & ~inside & ~own)


def treewidth_upper_bound(g: Graph) -> int:
    if g.n == 0:
        return -1
    width, _ = treewidth_min_degree(g.to_networkx())
    return width


def treewidth(g: Graph) -> int:
    """Exact treewidth; -1 for the empty graph.

    Dynamic programming over vertex subsets S, where the best width of an
    elimination order starting with S is the minimum over the last vertex v
    of S of the width for S - v and the number of vertices outside S that v
    reaches through S - v.
    """
    if g.n == 0:
        return -1
    upper = treewidth_upper_bound(g)
    lower = 1 if any(u != v for u, v in g.edges) else 0
    if upper == lower:
        return upper
    if g.n > MAX_EXACT_VERTICES:
        raise ValueError(
            f"Exact treewidth is limited to {MAX_EXACT_VERTICES} vertices, got {g.n}."
        )
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * g.n
    for v, nbrs in g.adjacency.items():
        for w in nbrs:
            adj[index[v]] |= 1 << index[w]
    best = [0] * (1 << g.n)
    best[0] = -1
    for mask in range(1, 1 << g.n):
        width = upper
        for v in _bits(mask):
            rest = mask ^ (1 << v)
            width = min(width, max(best[rest], _outside_reach(adj, rest, v)))
        best[mask] = width
    return best[-1]


def treewidth_at_most(g: Graph, t: int) -> bool:
    if treewidth_upper_bound(g) <= t:
        return True
    return treewidth(g) <= t
