"""Combinatorial reference traversals: level-order BFS and correct-chain search.

These are the ground-truth implementations the algebraic sweep engine is
checked against.  A *correct chain* is a simple chain whose vertex labels
strictly ascend; the chain search widens each BFS-style neighborhood step
with the closure along such chains, which is what lets it finish in fewer
iterations on favorable numberings.
"""
from __future__ import annotations

from bisect import bisect_left
from collections.abc import Set as AbstractSet

from .engine import IterationRecord, TraversalTrace
from .graph import Graph

__all__ = ["combinatorial_bfs", "combinatorial_ccs", "correct_chain_closure"]


def _neighborhood(g: Graph, frontier: AbstractSet[int], visited: AbstractSet[int]) -> set[int]:
    out: set[int] = set()
    for u in frontier:
        for w in g.neighbors(u):
            if w not in visited:
                out.add(w)
    return out


def combinatorial_bfs(g: Graph, s: int) -> TraversalTrace:
    """Classic level-order traversal from ``s``; frontiers are distance levels."""
    if not 1 <= s <= g.n:
        raise ValueError(f"start vertex {s} outside [1, {g.n}]")
    visited = {s}
    frontier = {s}
    records = [IterationRecord(k=0, frontier=(s,), state=None)]
    k = 0
    while True:
        nxt = _neighborhood(g, frontier, visited)
        if not nxt:
            break
        k += 1
        visited |= nxt
        records.append(IterationRecord(k=k, frontier=tuple(sorted(nxt)), state=None))
        frontier = nxt
    return TraversalTrace(n=g.n, start=s, records=tuple(records))


def correct_chain_closure(
    g: Graph, seeds: AbstractSet[int], visited: AbstractSet[int]
) -> set[int]:
    """Vertices reachable from ``seeds`` along label-ascending chains.

    Chains may pass only through unvisited vertices.  Computed by a
    single ascending sweep: a vertex joins as soon as some smaller
    neighbor has joined, and a vertex joining at label i can only enable
    labels above i, so one pass suffices.  Seeds are not part of the
    result.
    """
    if seeds & visited:
        raise ValueError("seeds and visited sets must be disjoint")
    joined = set(seeds)
    for i in range(1, g.n + 1):
        if i in visited or i in joined:
            continue
        adj = g.neighbors(i)
        for j in adj[: bisect_left(adj, i)]:
            if j in joined:
                joined.add(i)
                break
    return joined - seeds


def combinatorial_ccs(g: Graph, s: int) -> TraversalTrace:
    """Correct-chain search from ``s``.

    Each iteration takes one neighborhood step and then closes over the
    correct chains outgoing from the newly reached vertices, all within
    the same iteration.
    """
    if not 1 <= s <= g.n:
        raise ValueError(f"start vertex {s} outside [1, {g.n}]")
    visited = {s}
    frontier: set[int] = {s}
    records = [IterationRecord(k=0, frontier=(s,), state=None)]
    k = 0
    while True:
        reached = _neighborhood(g, frontier, visited)
        reached |= correct_chain_closure(g, reached, visited)
        if not reached:
            break
        k += 1
        visited |= reached
        records.append(IterationRecord(k=k, frontier=tuple(sorted(reached)), state=None))
        frontier = reached
    return TraversalTrace(n=g.n, start=s, records=tuple(records))
