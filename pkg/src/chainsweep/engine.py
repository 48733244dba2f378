"""State-vector sweep engine for graph traversal.

A traversal keeps one numeric value per vertex.  The start vertex is
seeded with the diagonal value d and all other entries with zero; each
iteration recomputes entries from neighbor values, and a vertex counts
as visited the first time its entry turns nonzero.  Three update rules
are provided:

* ``JACOBI``: every entry is recomputed from the previous iteration's
  values only; frontiers expand exactly like level-order BFS.
* ``GAUSS_SEIDEL``: one ascending in-place sweep per iteration, so a
  neighbor below the current label contributes its freshly computed
  value.  Within a single iteration this races along label-ascending
  ("correct") chains, which is why it can finish in fewer iterations.
* ``UNSIGNED_CCS``: the same ascending sweep with all signs positive.
  Values are nonnegative and can never cancel, which makes this the
  sound default for component *detection*.

Signed values at a vertex are signed sums of powers of d contributed by
distinct chains, and for small d contributions of opposite sign can
cancel to an exact zero (two length-2 chains and one length-3 chain
cancel at d=2).  Such a false zero delays a first visit, so the signed
rules are trace-reproduction modes; detection should use the unsigned
rule, or a d large enough that no cancellation occurs.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from .graph import ComponentPartition, Graph

__all__ = [
    "Variant",
    "Arithmetic",
    "TraversalConfig",
    "StateVector",
    "IterationRecord",
    "TraversalTrace",
    "FloatRangeError",
    "DEFAULT_SATURATION_CAP",
    "initial_state",
    "jacobi_step",
    "gauss_seidel_step",
    "unsigned_step",
    "extract_frontier",
    "regularize",
    "update_mask",
    "find_connected_component",
    "find_all_components",
]

DEFAULT_SATURATION_CAP = 2**62
DEFAULT_REGULARIZE_EVERY = 4


class Variant(enum.Enum):
    JACOBI = "jacobi"
    GAUSS_SEIDEL = "gauss-seidel"
    UNSIGNED_CCS = "unsigned-ccs"


class Arithmetic(enum.Enum):
    EXACT = "exact"        # arbitrary-precision signed integers
    SATURATE = "saturate"  # nonnegative integers clamped at a cap
    FLOAT = "float"        # floats with periodic regularization


class FloatRangeError(ArithmeticError):
    """Float-mode state left the representable range.

    Raised when an entry turns non-finite, or when regularization
    underflows a nonzero entry to zero (which would corrupt the
    zero/nonzero pattern the traversal depends on).
    """


@dataclass(frozen=True)
class TraversalConfig:
    """Configuration of one traversal run.

    ``d`` of ``None`` defers to the graph's own diagonal value.  In
    FLOAT mode a missing ``regularize_every`` defaults to 4.
    """

    variant: Variant = Variant.GAUSS_SEIDEL
    arithmetic: Arithmetic = Arithmetic.EXACT
    masking: bool = False
    regularize_every: int | None = None
    d: int | float | None = None
    saturation_cap: int = DEFAULT_SATURATION_CAP

    def __post_init__(self) -> None:
        if self.arithmetic is Arithmetic.SATURATE and self.variant is not Variant.UNSIGNED_CCS:
            raise ValueError("saturating arithmetic is only valid with the unsigned variant")
        if self.arithmetic is Arithmetic.FLOAT and self.regularize_every is None:
            object.__setattr__(self, "regularize_every", DEFAULT_REGULARIZE_EVERY)
        if self.regularize_every is not None and self.regularize_every < 1:
            raise ValueError(f"regularization period must be >= 1, got {self.regularize_every}")
        if self.d is not None:
            if self.d < 1:
                raise ValueError(f"diagonal value must be >= 1, got {self.d}")
            if self.arithmetic is not Arithmetic.FLOAT:
                if isinstance(self.d, float):
                    if not self.d.is_integer():
                        raise ValueError("integer arithmetic modes need an integer d")
                    object.__setattr__(self, "d", int(self.d))
        if self.saturation_cap < 1:
            raise ValueError("saturation cap must be positive")

    def resolve_d(self, g: Graph) -> "TraversalConfig":
        """Return a config whose ``d`` is concrete, taking the graph's if unset."""
        if self.d is not None:
            return self
        return replace(self, d=g.d)


def _effective_d(g: Graph, cfg: TraversalConfig) -> int | float:
    return g.d if cfg.d is None else cfg.d


@dataclass(frozen=True)
class StateVector:
    """Per-vertex values after ``iteration`` sweeps from ``start``."""

    values: tuple
    iteration: int
    start: int

    @property
    def n(self) -> int:
        return len(self.values)

    def support(self) -> frozenset[int]:
        """Labels of nonzero entries."""
        return frozenset(i + 1 for i, v in enumerate(self.values) if v != 0)


def initial_state(g: Graph, s: int, cfg: TraversalConfig) -> StateVector:
    """x(0): value d at the start vertex, zero elsewhere."""
    if not 1 <= s <= g.n:
        raise ValueError(f"start vertex {s} outside [1, {g.n}]")
    d = _effective_d(g, cfg)
    if cfg.arithmetic is Arithmetic.FLOAT:
        values = [0.0] * g.n
        values[s - 1] = float(d)
    else:
        values = [0] * g.n
        values[s - 1] = int(d)
    return StateVector(values=tuple(values), iteration=0, start=s)


@dataclass(frozen=True)
class IterationRecord:
    """One recorded iteration: its index, new frontier, optional state."""

    k: int
    frontier: tuple[int, ...]
    state: tuple | None = None


@dataclass(frozen=True)
class TraversalTrace:
    """Frontier history of one traversal.

    ``records[0]`` is always iteration 0 with frontier ``{start}``;
    later records hold the (pairwise disjoint, nonempty) first-visit
    frontiers.  The visited set after iteration k is the union of the
    frontiers up to k.
    """

    n: int
    start: int
    records: tuple[IterationRecord, ...]

    @property
    def iteration_count(self) -> int:
        """Number of frontier-producing iterations (excludes iteration 0)."""
        return len(self.records) - 1

    @property
    def frontiers(self) -> tuple[tuple[int, ...], ...]:
        return tuple(r.frontier for r in self.records)

    def frontier_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r.frontier) for r in self.records)

    def visited_after(self, k: int) -> frozenset[int]:
        return frozenset(v for r in self.records[: k + 1] for v in r.frontier)

    @property
    def component(self) -> frozenset[int]:
        return self.visited_after(self.iteration_count)


AbstractSetLike = frozenset[int] | set[int]


def _check_finite(values: Sequence[float]) -> None:
    for v in values:
        if not math.isfinite(v):
            raise FloatRangeError(f"state value {v!r} is not finite")


def _masked_lookup(n: int, mask: AbstractSetLike) -> list[bool]:
    flags = [False] * (n + 1)
    for v in mask:
        flags[v] = True
    return flags


def jacobi_step(
    g: Graph,
    x: StateVector,
    cfg: TraversalConfig,
    mask: AbstractSetLike = frozenset(),
) -> StateVector:
    """One simultaneous update: every unmasked entry is recomputed from
    the previous values of its unmasked neighbors (new = (-b + sum) * -d).

    Per-vertex updates are independent, so this step could run as a
    parallel map; the implementation is a sequential loop.
    """
    if cfg.variant is not Variant.JACOBI:
        raise ValueError(f"config variant is {cfg.variant.value}, expected jacobi")
    d = _effective_d(g, cfg)
    prev = x.values
    out = list(prev)
    masked = _masked_lookup(g.n, mask)
    for i in g.vertices():
        if masked[i]:
            continue
        acc = -1 if i == x.start else 0
        for j in g.neighbors(i):
            if not masked[j]:
                acc += prev[j - 1]
        out[i - 1] = acc * -d
    if cfg.arithmetic is Arithmetic.FLOAT:
        _check_finite(out)
    return StateVector(values=tuple(out), iteration=x.iteration + 1, start=x.start)


def gauss_seidel_step(
    g: Graph,
    x: StateVector,
    cfg: TraversalConfig,
    mask: AbstractSetLike = frozenset(),
) -> StateVector:
    """One ascending in-place sweep (must stay sequential in label order).

    Because entries are overwritten in place, a neighbor below the
    current label contributes its value from this iteration and a
    neighbor above it the value from the previous one.
    """
    if cfg.variant is not Variant.GAUSS_SEIDEL:
        raise ValueError(f"config variant is {cfg.variant.value}, expected gauss-seidel")
    d = _effective_d(g, cfg)
    vals = list(x.values)
    masked = _masked_lookup(g.n, mask)
    for i in g.vertices():
        if masked[i]:
            continue
        acc = -1 if i == x.start else 0
        for j in g.neighbors(i):
            if not masked[j]:
                acc += vals[j - 1]
        vals[i - 1] = acc * -d
    if cfg.arithmetic is Arithmetic.FLOAT:
        _check_finite(vals)
    return StateVector(values=tuple(vals), iteration=x.iteration + 1, start=x.start)


def unsigned_step(
    g: Graph,
    x: StateVector,
    cfg: TraversalConfig,
    mask: AbstractSetLike = frozenset(),
) -> StateVector:
    """Ascending sweep with all-positive terms: new = (b + sum) * d.

    Values are nonnegative and nondecreasing in support, so no
    cancellation can erase a visit.  Saturating arithmetic clamps at the
    cap without wrapping; a saturated entry stays nonzero, so frontiers
    are unaffected.
    """
    if cfg.variant is not Variant.UNSIGNED_CCS:
        raise ValueError(f"config variant is {cfg.variant.value}, expected unsigned-ccs")
    d = _effective_d(g, cfg)
    saturate = cfg.arithmetic is Arithmetic.SATURATE
    cap = cfg.saturation_cap
    vals = list(x.values)
    masked = _masked_lookup(g.n, mask)
    for i in g.vertices():
        if masked[i]:
            continue
        acc = 1 if i == x.start else 0
        for j in g.neighbors(i):
            if not masked[j]:
                acc += vals[j - 1]
        acc *= d
        if saturate and acc > cap:
            acc = cap
        vals[i - 1] = acc
    if cfg.arithmetic is Arithmetic.FLOAT:
        _check_finite(vals)
    return StateVector(values=tuple(vals), iteration=x.iteration + 1, start=x.start)


_STEPS: dict[Variant, Callable[..., StateVector]] = {
    Variant.JACOBI: jacobi_step,
    Variant.GAUSS_SEIDEL: gauss_seidel_step,
    Variant.UNSIGNED_CCS: unsigned_step,
}


def extract_frontier(x_prev: StateVector, x_next: StateVector) -> set[int]:
    """Labels whose entries transition zero -> nonzero between the two states."""
    if x_prev.n != x_next.n:
        raise ValueError("state vectors differ in length")
    return {
        i + 1
        for i, (a, b) in enumerate(zip(x_prev.values, x_next.values))
        if a == 0 and b != 0
    }


def regularize(x: StateVector, cfg: TraversalConfig) -> StateVector:
    """Rescale every entry by d**-M to keep float magnitudes bounded.

    The zero/nonzero pattern must survive; an underflow that erases a
    nonzero entry raises :class:`FloatRangeError`.
    """
    if cfg.arithmetic is not Arithmetic.FLOAT:
        raise ValueError("regularization applies to float arithmetic only")
    if cfg.d is None:
        raise ValueError("config has no concrete d; use resolve_d() first")
    factor = float(cfg.d) ** cfg.regularize_every
    out = tuple(v / factor for v in x.values)
    for old, new in zip(x.values, out):
        if (old == 0) != (new == 0):
            raise FloatRangeError("regularization underflowed a nonzero entry to zero")
    return StateVector(values=out, iteration=x.iteration, start=x.start)


def update_mask(trace: TraversalTrace, cfg: TraversalConfig) -> set[int]:
    """Vertices to exclude from the next sweep: everything visited
    before the current frontier.  Empty when masking is disabled."""
    if not cfg.masking or len(trace.records) < 2:
        return set()
    mask: set[int] = set()
    for record in trace.records[:-1]:
        mask.update(record.frontier)
    return mask


def find_connected_component(
    g: Graph,
    s: int,
    cfg: TraversalConfig | None = None,
    *,
    snapshot: bool = False,
    completed: AbstractSetLike = frozenset(),
) -> tuple[frozenset[int], TraversalTrace]:
    """Traverse the component containing ``s``.

    Runs the configured sweep until an iteration produces no first
    visit (at most n iterations), recording one trace entry per
    frontier-producing iteration.  ``completed`` vertices (from already
    finished components) are added to the mask when masking is on.

    The default config uses the unsigned variant, for which the
    returned set is exactly the component of ``s``.
    """
    if cfg is None:
        cfg = TraversalConfig(variant=Variant.UNSIGNED_CCS)
    cfg = cfg.resolve_d(g)
    step = _STEPS[cfg.variant]
    x = initial_state(g, s, cfg)
    visited: set[int] = {s}
    records = [IterationRecord(k=0, frontier=(s,), state=x.values if snapshot else None)]
    period = cfg.regularize_every
    for k in range(1, g.n + 1):
        if cfg.masking:
            mask = visited - set(records[-1].frontier)
            mask |= set(completed)
        else:
            mask = set()
        x_next = step(g, x, cfg, mask)
        newly = extract_frontier(x, x_next) - visited
        if cfg.arithmetic is Arithmetic.FLOAT and period and k % period == 0:
            x_next = regularize(x_next, cfg)
        if not newly:
            break
        visited |= newly
        records.append(
            IterationRecord(
                k=k,
                frontier=tuple(sorted(newly)),
                state=x_next.values if snapshot else None,
            )
        )
        x = x_next
    trace = TraversalTrace(n=g.n, start=s, records=tuple(records))
    return frozenset(visited), trace


def find_all_components(
    g: Graph,
    cfg: TraversalConfig | None = None,
    seed_rule: Callable[[Sequence[int]], int] | None = None,
) -> ComponentPartition:
    """Partition the graph by repeated traversals from fresh start vertices.

    ``seed_rule`` picks the next start among the sorted unvisited
    labels; the default takes the lowest, which makes component
    numbering match :func:`~chainsweep.graph.components_union_find`.
    """
    if cfg is None:
        cfg = TraversalConfig(variant=Variant.UNSIGNED_CCS)
    remaining = set(g.vertices())
    done: set[int] = set()
    members: list[tuple[int, ...]] = []
    while remaining:
        candidates = sorted(remaining)
        s = candidates[0] if seed_rule is None else seed_rule(candidates)
        if s not in remaining:
            raise ValueError(f"seed rule returned visited or invalid vertex {s}")
        component, _ = find_connected_component(g, s, cfg, completed=done)
        members.append(tuple(sorted(component)))
        remaining -= component
        done |= component
    return ComponentPartition.from_members(g.n, members)
