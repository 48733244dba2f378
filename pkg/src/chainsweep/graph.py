"""Immutable undirected simple graphs with 1-based vertex labels.

The graph is stored in compressed adjacency form: one ascending-sorted
neighbor tuple per vertex.  Labels run from 1 to n at every interface;
any zero-based offsetting is internal.  Each graph also carries the
modified diagonal value ``d`` used by the sweep engine, so a traversal
is reproducible from the graph object alone.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "VertexPermutation",
    "ComponentPartition",
    "build_graph",
    "apply_permutation",
    "components_union_find",
]

DEFAULT_DIAGONAL = 2


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph in compressed adjacency form.

    Attributes:
        n: vertex count; labels are 1..n.
        d: modified diagonal value (>= 1) used by traversals.
        neighbors_of: per-vertex ascending-sorted neighbor tuples,
            indexed 0-based internally (use :meth:`neighbors`).
        dropped_duplicates: count of duplicate input edges collapsed
            during construction.
    """

    n: int
    d: int | float
    neighbors_of: tuple[tuple[int, ...], ...] = field(repr=False)
    dropped_duplicates: int = 0

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(a) for a in self.neighbors_of) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Ascending-sorted neighbors of vertex ``v`` (1-based)."""
        return self.neighbors_of[v - 1]

    def degree(self, v: int) -> int:
        return len(self.neighbors_of[v - 1])

    def smaller_neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors with labels below ``v`` (one binary-search split)."""
        adj = self.neighbors_of[v - 1]
        return adj[: bisect_left(adj, v)]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographic order."""
        return [
            (u, v)
            for u in range(1, self.n + 1)
            for v in self.neighbors(u)
            if u < v
        ]

    def vertices(self) -> range:
        return range(1, self.n + 1)


def build_graph(
    edges: Iterable[tuple[int, int]],
    n: int,
    d: int | float = DEFAULT_DIAGONAL,
) -> Graph:
    """Build a canonical :class:`Graph` from an edge list.

    Duplicate edges (in either orientation) are collapsed silently and
    counted; self-loops are rejected.

    Raises:
        ValueError: if ``n < 1``, ``d < 1``, a label falls outside
            ``[1, n]``, or an edge is a self-loop.
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    if d < 1:
        raise ValueError(f"diagonal value must be >= 1, got {d}")
    seen: set[tuple[int, int]] = set()
    dropped = 0
    for u, v in edges:
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise ValueError(f"edge ({u}, {v}) has a label outside [1, {n}]")
        if u == v:
            raise ValueError(f"self-loop ({u}, {u}) not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            dropped += 1
        else:
            seen.add(key)
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        adjacency[u - 1].append(v)
        adjacency[v - 1].append(u)
    return Graph(
        n=n,
        d=d,
        neighbors_of=tuple(tuple(sorted(a)) for a in adjacency),
        dropped_duplicates=dropped,
    )


@dataclass(frozen=True)
class VertexPermutation:
    """Bijection on vertex labels 1..n.

    ``forward`` maps old labels to new ones (0-based tuple index holds
    the image of label index+1).
    """

    forward: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.forward)
        if sorted(self.forward) != list(range(1, n + 1)):
            raise ValueError("permutation is not a bijection on [1, n]")

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> "VertexPermutation":
        n = len(mapping)
        return cls(tuple(mapping[old] for old in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.forward)

    def apply(self, label: int) -> int:
        return self.forward[label - 1]

    def inverse(self) -> "VertexPermutation":
        inv = [0] * self.n
        for old, new in enumerate(self.forward, start=1):
            inv[new - 1] = old
        return VertexPermutation(tuple(inv))

    def as_pairs(self) -> list[tuple[int, int]]:
        """(old, new) pairs in old-label order."""
        return list(enumerate(self.forward, start=1))


def apply_permutation(g: Graph, p: VertexPermutation) -> Graph:
    """Relabel ``g`` through ``p``; adjacency is re-sorted ascending."""
    if p.n != g.n:
        raise ValueError(f"permutation size {p.n} != graph size {g.n}")
    adjacency: list[tuple[int, ...]] = [()] * g.n
    for old in g.vertices():
        new = p.apply(old)
        adjacency[new - 1] = tuple(sorted(p.apply(w) for w in g.neighbors(old)))
    return Graph(
        n=g.n,
        d=g.d,
        neighbors_of=tuple(adjacency),
        dropped_duplicates=g.dropped_duplicates,
    )


@dataclass(frozen=True)
class ComponentPartition:
    """Assignment of every vertex to one of K components (1-based)."""

    assignment: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.members)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def component_of(self, v: int) -> int:
        return self.assignment[v - 1]

    def as_sets(self) -> frozenset[frozenset[int]]:
        """Order-insensitive view, for partition equality checks."""
        return frozenset(frozenset(c) for c in self.members)

    @classmethod
    def from_members(
        cls, n: int, members: Sequence[Iterable[int]]
    ) -> "ComponentPartition":
        assignment = [0] * n
        canon = []
        for idx, comp in enumerate(members, start=1):
            comp_sorted = tuple(sorted(comp))
            canon.append(comp_sorted)
            for v in comp_sorted:
                if assignment[v - 1]:
                    raise ValueError(f"vertex {v} assigned twice")
                assignment[v - 1] = idx
        if any(a == 0 for a in assignment):
            missing = [v + 1 for v, a in enumerate(assignment) if a == 0]
            raise ValueError(f"vertices {missing} not covered by any component")
        return cls(assignment=tuple(assignment), members=tuple(canon))


def components_union_find(g: Graph) -> ComponentPartition:
    """Exact connected components by edge-set union (disjoint sets).

    This is the independent reference against which the traversal
    engines are checked.  Components are numbered by ascending smallest
    member, which matches the default lowest-label seeding order of the
    traversal drivers.
    """
    parent = list(range(g.n + 1))

    def find(a: int) -> int:
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:  # path compression
            parent[a], a = root, parent[a]
        return root

    for u in g.vertices():
        for v in g.neighbors(u):
            if u < v:
                ra, rb = find(u), find(v)
                if ra != rb:
                    if ra > rb:
                        ra, rb = rb, ra
                    parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for v in g.vertices():
        groups.setdefault(find(v), []).append(v)
    members = [tuple(sorted(groups[r])) for r in sorted(groups)]
    return ComponentPartition.from_members(g.n, members)
