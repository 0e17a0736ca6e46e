from __future__ import annotations
from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterator, List, Optional, Union
from scipy.special import comb
from ..framework.Graph import Graph


@dataclass(frozen=True)
class ConnectedSetQuery:
    root: int
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"p must be at least 1, got {self.p}.")
        if self.q < 0:
            raise ValueError(f"q must be non-negative, got {self.q}.")


def count_bound(p: int, q: int) -> int:
    """Maximum number of sets a single root can produce."""
    return int(comb(p + q, p, exact=True))


def iter_connected_sets(g: Graph, query: ConnectedSetQuery) -> Iterator[FrozenSet[int]]:
    """Connected sets U containing the root with |U| <= p and |N(U)| <= q.

    Branches on the smallest unclassified neighbor w of U: either w joins
    U or w is forbidden, i.e. placed in N(U). A set is reported once all
    its neighbors are forbidden, so each set appears exactly once.
    """
    if not g.has_vertex(query.root):
        raise ValueError(f"Root {query.root} is not in the graph.")
    adj = g.adjacency
    p, q = query.p, query.q

    def branch(inside, forbidden, frontier):
        if not frontier:
            yield inside
            return
        w = min(frontier)
        rest = frontier - {w}
        if len(inside) < p:
            grown = inside | {w}
            yield from branch(grown, forbidden, rest | (adj[w] - grown - forbidden))
        if len(forbidden) < q:
            yield from branch(inside, forbidden | {w}, rest)

    yield from branch(frozenset([query.root]), frozenset(), adj[query.root])


def enum_connected_sets(
    g: Graph,
    query: ConnectedSetQuery,
    visitor: Optional[Callable[[FrozenSet[int]], None]] = None,
) -> Union[List[FrozenSet[int]], int]:
    """All sets of ``iter_connected_sets`` sorted by their sorted ids.

    With a ``visitor`` the sets are streamed to it in search order and only
    their number is returned.
    """
    if visitor is not None:
        count = 0
        for u in iter_connected_sets(g, query):
            visitor(u)
            count += 1
        return count
    return sorted(iter_connected_sets(g, query), key=sorted)
