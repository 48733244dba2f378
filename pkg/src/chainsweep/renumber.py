"""Vertex renumbering in traversal level order.

Relabeling vertices by nondecreasing distance from a root makes every
tree edge of the reachability tree ascend from parent to child, so an
ascending chain reaches every vertex from the root and the chain-search
sweep finishes in a single iteration.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .engine import TraversalConfig, Variant, find_connected_component
from .graph import Graph, VertexPermutation, apply_permutation

__all__ = ["NumberingReport", "bfs_order_renumbering", "numbering_quality"]


def _level_order(g: Graph, root: int) -> list[int]:
    """Vertices of root's component in nondecreasing distance order,
    ties broken by ascending old label."""
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return sorted(dist, key=lambda v: (dist[v], v))


def bfs_order_renumbering(g: Graph, root: int) -> VertexPermutation:
    """Permutation assigning labels in level order from ``root``.

    The root gets label 1; vertices at equal distance keep their
    relative old-label order.  If the graph is disconnected, the same
    scheme is applied per component, taking the lowest unvisited label
    as the next root, so the result is always a bijection on [1, n].
    """
    if not 1 <= root <= g.n:
        raise ValueError(f"root {root} outside [1, {g.n}]")
    forward = [0] * g.n
    next_label = 1
    seen: set[int] = set()
    component_root = root
    while True:
        for v in _level_order(g, component_root):
            forward[v - 1] = next_label
            seen.add(v)
            next_label += 1
        unseen = [v for v in g.vertices() if v not in seen]
        if not unseen:
            break
        component_root = unseen[0]
    return VertexPermutation(tuple(forward))


@dataclass(frozen=True)
class NumberingReport:
    """How well a labeling supports ascending chains from a root.

    ``correct_edge_fraction`` is the share of reachability-tree edges
    (original labeling, rooted at the given root) that ascend from
    parent to child.  The iteration counts come from chain-search runs
    before and after renumbering.
    """

    correct_edge_fraction: float
    n_ccs_before: int
    n_ccs_after: int


def _tree_edge_ascending_fraction(g: Graph, root: int) -> float:
    dist = {root: 0}
    parent: dict[int, int] = {}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    if not parent:
        return 1.0  # no tree edges: trivially optimal
    ascending = sum(1 for child, par in parent.items() if par < child)
    return ascending / len(parent)


def numbering_quality(g: Graph, root: int) -> NumberingReport:
    """Run the chain search from ``root`` before and after renumbering.

    Uses the unsigned sweep, whose frontiers are cancellation-free, so
    the after-count is guaranteed to be 1 on a connected graph.
    """
    cfg = TraversalConfig(variant=Variant.UNSIGNED_CCS)
    _, before = find_connected_component(g, root, cfg)
    perm = bfs_order_renumbering(g, root)
    relabeled = apply_permutation(g, perm)
    _, after = find_connected_component(relabeled, perm.apply(root), cfg)
    return NumberingReport(
        correct_edge_fraction=_tree_edge_ascending_fraction(g, root),
        n_ccs_before=before.iteration_count,
        n_ccs_after=after.iteration_count,
    )
