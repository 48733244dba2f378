"""Brute-force chain enumeration and contribution arithmetic.

Every value the sweep engine computes decomposes into contributions
carried along chains: a value v entering a chain of length L arrives at
the far end as v * (-d)**L.  This module enumerates simple chains
exhaustively (small graphs only), evaluates contributions, and provides
the independent checks used to validate the engine:

* the first-reach value law for the Jacobi variant (value at first
  visit = number of shortest paths times a signed power of d), and
* two small worked fixtures where the ascending sweep's value is the
  sum of a walk contribution and of two chain contributions.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .engine import Arithmetic, TraversalConfig, Variant, gauss_seidel_step, initial_state
from .engine import find_connected_component
from .graph import Graph, build_graph

__all__ = [
    "Chain",
    "ChainContribution",
    "ContributionSum",
    "VerificationReport",
    "enumerate_simple_chains",
    "max_chain_length",
    "chain_traverse",
    "contribution_of",
    "collect_contributions",
    "shortest_path_counts",
    "verify_first_reach_values",
    "verify_contribution_fixtures",
]

ENUMERATION_LIMIT = 16


@dataclass(frozen=True)
class Chain:
    """A vertex sequence whose consecutive pairs are edges.

    Simple unless it revisits a vertex, in which case it is a walk.
    A chain is *correct* when its labels strictly ascend.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a chain needs at least one vertex")

    @property
    def length(self) -> int:
        """Edge count."""
        return len(self.vertices) - 1

    @property
    def is_walk(self) -> bool:
        return len(set(self.vertices)) < len(self.vertices)

    @property
    def is_correct(self) -> bool:
        return all(a < b for a, b in zip(self.vertices, self.vertices[1:]))

    def validate_edges(self, g: Graph) -> None:
        for a, b in zip(self.vertices, self.vertices[1:]):
            if b not in g.neighbors(a):
                raise ValueError(f"({a}, {b}) is not an edge")


@dataclass(frozen=True)
class ChainContribution:
    """Value transmitted along one chain and what arrives at its end.

    ``kind`` is "I" when the first step ascends (the source transmits
    its current-iteration value) and "II" when it descends (previous
    iteration value).
    """

    chain: Chain
    transmitted: int
    contribution: int
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in ("I", "II"):
            raise ValueError(f"chain kind must be 'I' or 'II', got {self.kind!r}")


@dataclass(frozen=True)
class ContributionSum:
    """Contributions to one target vertex grouped by source vertex."""

    per_source: tuple[tuple[int, int], ...]  # (source label, summed contribution)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.per_source)


def enumerate_simple_chains(
    g: Graph,
    frm: int,
    to: int,
    correct_only: bool = False,
    max_len: int | None = None,
) -> list[Chain]:
    """All simple chains from ``frm`` to ``to``, lexicographically ordered.

    Exponential by nature, so guarded to graphs with at most
    ``ENUMERATION_LIMIT`` vertices.  ``frm == to`` yields the single
    zero-length chain.
    """
    if g.n > ENUMERATION_LIMIT:
        raise ValueError(f"chain enumeration is limited to n <= {ENUMERATION_LIMIT}")
    for v in (frm, to):
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} outside [1, {g.n}]")
    limit = g.n - 1 if max_len is None else max_len
    found: list[Chain] = []
    path = [frm]
    on_path = {frm}

    def walk() -> None:
        here = path[-1]
        if here == to:
            found.append(Chain(tuple(path)))
            # a simple chain may not continue through its endpoint and return
            return
        if len(path) - 1 >= limit:
            return
        for w in g.neighbors(here):
            if w in on_path:
                continue
            if correct_only and w <= here:
                continue
            path.append(w)
            on_path.add(w)
            walk()
            path.pop()
            on_path.remove(w)

    walk()
    found.sort(key=lambda c: c.vertices)
    return found


def max_chain_length(
    g: Graph, frm: int, to: int, correct_only: bool = False
) -> int | None:
    """Maximum simple-chain length between two vertices, None if unreachable."""
    chains = enumerate_simple_chains(g, frm, to, correct_only=correct_only)
    if not chains:
        return None
    return max(c.length for c in chains)


def chain_traverse(chain: Chain, v, d):
    """Push value ``v`` edge by edge along the chain: one multiplication
    by -d per edge, returning v * (-d)**length."""
    acc = v
    for _ in range(chain.length):
        acc = acc * -d
    return acc


def contribution_of(chain: Chain, transmitted, d) -> ChainContribution:
    """Evaluate one chain's contribution and classify its first step."""
    if chain.length == 0:
        kind = "I"  # degenerate: no first step; treat as ascending
    else:
        kind = "I" if chain.vertices[0] < chain.vertices[1] else "II"
    return ChainContribution(
        chain=chain,
        transmitted=transmitted,
        contribution=chain_traverse(chain, transmitted, d),
        kind=kind,
    )


def collect_contributions(contributions: list[ChainContribution]) -> ContributionSum:
    """Group contributions by their chain's source vertex."""
    sums: dict[int, int] = {}
    for c in contributions:
        src = c.chain.vertices[0]
        sums[src] = sums.get(src, 0) + c.contribution
    return ContributionSum(per_source=tuple(sorted(sums.items())))


def shortest_path_counts(g: Graph, s: int) -> tuple[dict[int, int], dict[int, int]]:
    """Distance and shortest-path count from ``s`` via level-order sweep."""
    dist = {s: 0}
    count = {s: 1}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                count[w] = count[u]
                queue.append(w)
            elif dist[w] == dist[u] + 1:
                count[w] += count[u]
    return dist, count


@dataclass
class VerificationReport:
    """Outcome of a verification suite: per-check lines plus failures."""

    title: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    def lines(self) -> list[str]:
        status = "ok" if self.ok else "FAIL"
        out = [f"{status}: {self.title} ({self.checked} checks)"]
        out.extend(f"    mismatch: {f}" for f in self.failures)
        return out


def verify_first_reach_values(g: Graph, s: int, d: int | None = None) -> VerificationReport:
    """Check the Jacobi first-reach value law against a path-counting oracle.

    A vertex first visited at iteration t must carry the value
    (number of shortest paths from s) * (-1)**t * d**(t+1), and must
    have held zero at every earlier iteration.  Only feasible for small
    graphs (the oracle itself is cheap, but mismatch reporting wants
    full snapshots), so guarded at n <= 12.
    """
    if g.n > 12:
        raise ValueError("first-reach verification is limited to n <= 12")
    if d is None:
        d = g.d
    report = VerificationReport(title=f"first-reach value law (start {s}, d={d})")
    cfg = TraversalConfig(variant=Variant.JACOBI, arithmetic=Arithmetic.EXACT, d=d)
    _, trace = find_connected_component(g, s, cfg, snapshot=True)
    dist, counts = shortest_path_counts(g, s)
    first_iter = {v: r.k for r in trace.records for v in r.frontier}
    for v, t in sorted(first_iter.items()):
        if v == s:
            continue
        value = trace.records[t].state[v - 1]
        expected = counts[v] * (-1) ** t * d ** (t + 1)
        report.record(
            value == expected and dist[v] == t,
            f"vertex {v}: reached k={t} (distance {dist[v]}), "
            f"value {value}, expected {expected}",
        )
        for earlier in range(1, t):
            report.record(
                trace.records[earlier].state[v - 1] == 0,
                f"vertex {v}: nonzero before first visit at k={earlier}",
            )
    return report


def _one_ascending_sweep(g: Graph, s: int, d: int) -> tuple:
    cfg = TraversalConfig(variant=Variant.GAUSS_SEIDEL, arithmetic=Arithmetic.EXACT, d=d)
    x = initial_state(g, s, cfg)
    return gauss_seidel_step(g, x, cfg).values


def verify_contribution_fixtures(d: int = 2) -> VerificationReport:
    """Check the two worked contribution fixtures at a given d.

    Fixture 1 (path 1-2-3, start 2): the sweep reaches vertex 3 through
    the walk 2,1,2,3, so the transmitted value is d + d**3 and
    x_3 = -(d**2) - d**4.

    Fixture 2 (five vertices, start 1): vertex 5 receives the two
    correct chains 1-2-5 and 1-3-4-5, so x_5 = d**3 - d**4; the same
    number must come out of explicit chain enumeration.
    """
    report = VerificationReport(title=f"contribution fixtures (d={d})")

    path = build_graph([(1, 2), (2, 3)], n=3, d=d)
    values = _one_ascending_sweep(path, s=2, d=d)
    walk = Chain((2, 1, 2))
    transmitted = d + chain_traverse(walk, d, d)  # d + d**3
    report.record(
        values[1] == transmitted,
        f"walk fixture: x_2 = {values[1]}, expected {transmitted}",
    )
    report.record(
        values[2] == -(d**2) - d**4,
        f"walk fixture: x_3 = {values[2]}, expected {-(d**2) - d**4}",
    )

    twochains = build_graph([(1, 2), (1, 3), (3, 4), (4, 5), (2, 5)], n=5, d=d)
    values = _one_ascending_sweep(twochains, s=1, d=d)
    chains = enumerate_simple_chains(twochains, 1, 5, correct_only=True)
    total = collect_contributions([contribution_of(c, d, d) for c in chains]).total
    report.record(
        values[4] == d**3 - d**4,
        f"chain-sum fixture: x_5 = {values[4]}, expected {d**3 - d**4}",
    )
    report.record(
        total == values[4],
        f"chain-sum fixture: enumerated sum {total} != sweep value {values[4]}",
    )
    report.record(
        [c.vertices for c in chains] == [(1, 2, 5), (1, 3, 4, 5)],
        f"chain-sum fixture: unexpected chain set {[c.vertices for c in chains]}",
    )
    return report
