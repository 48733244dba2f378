"""File formats and corpus generation.

Graph input comes as whitespace edge lists (one "u v" pair per line,
optional "n m" header, '#' or '%' comments) or as Matrix Market
coordinate files restricted to pattern/symmetric, which is exactly the
sparse "portrait" of a modified adjacency matrix: diagonal entries are
ignored because the engine supplies its own diagonal value.

Traversal runs serialize as line-delimited JSON records with a schema
version; state values travel as decimal strings so exact integers
survive round trips at any magnitude.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .engine import IterationRecord, TraversalConfig, TraversalTrace
from .graph import Graph, VertexPermutation

__all__ = [
    "ParseError",
    "parse_edge_list",
    "parse_matrix_market",
    "format_edge_list",
    "parse_permutation",
    "format_permutation",
    "TraceDocument",
    "parse_trace_document",
    "generate_random_graph",
]

TRACE_SCHEMA_VERSION = 1


class ParseError(ValueError):
    """Malformed input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#") or stripped.startswith("%"):
            continue
        out.append((lineno, stripped))
    return out


def _int_pair(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected two integers, got {line!r}", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected two integers, got {line!r}", lineno) from None


def parse_edge_list(text: str) -> tuple[list[tuple[int, int]], int]:
    """Parse a whitespace edge list into (edges, n).

    The first non-comment line is read as an "n m" header when its
    second number equals the count of remaining data lines; otherwise
    every line is an edge and n is the largest label seen.
    """
    lines = _data_lines(text)
    if not lines:
        raise ParseError("no data lines found")
    declared_n: int | None = None
    first_no, first = lines[0]
    a, b = _int_pair(first, first_no)
    if b == len(lines) - 1 and a >= 1:
        declared_n = a
        lines = lines[1:]
    edges: list[tuple[int, int]] = []
    max_label = 0
    for lineno, line in lines:
        u, v = _int_pair(line, lineno)
        if u < 1 or v < 1:
            raise ParseError(f"labels must be positive, got ({u}, {v})", lineno)
        if u == v:
            raise ParseError(f"self-loop ({u}, {u})", lineno)
        if declared_n is not None and (u > declared_n or v > declared_n):
            raise ParseError(
                f"label {max(u, v)} exceeds declared vertex count {declared_n}", lineno
            )
        edges.append((u, v))
        max_label = max(max_label, u, v)
    n = declared_n if declared_n is not None else max_label
    return edges, n


def parse_matrix_market(text: str) -> tuple[list[tuple[int, int]], int]:
    """Parse a Matrix Market coordinate pattern symmetric file.

    Off-diagonal entries fold into undirected edges; diagonal entries
    are skipped (they stand for the modified diagonal, not edges).
    Any other object/format/field/symmetry combination is rejected.
    """
    raw_lines = text.splitlines()
    if not raw_lines or not raw_lines[0].startswith("%%MatrixMarket"):
        raise ParseError("missing %%MatrixMarket header", 1)
    tokens = raw_lines[0].split()
    if len(tokens) != 5:
        raise ParseError(f"malformed header {raw_lines[0]!r}", 1)
    _, obj, fmt, fieldkind, symmetry = (t.lower() for t in tokens)
    if (obj, fmt, fieldkind, symmetry) != ("matrix", "coordinate", "pattern", "symmetric"):
        raise ParseError(
            "unsupported format: need 'matrix coordinate pattern symmetric', "
            f"got '{obj} {fmt} {fieldkind} {symmetry}'",
            1,
        )
    lines = [
        (no, s)
        for no, raw in enumerate(raw_lines[1:], start=2)
        for s in [raw.strip()]
        if s and not s.startswith("%")
    ]
    if not lines:
        raise ParseError("missing size line")
    size_no, size_line = lines[0]
    parts = size_line.split()
    if len(parts) != 3:
        raise ParseError(f"expected 'rows cols nnz', got {size_line!r}", size_no)
    try:
        rows, cols, nnz = (int(p) for p in parts)
    except ValueError:
        raise ParseError(f"expected 'rows cols nnz', got {size_line!r}", size_no) from None
    if rows != cols:
        raise ParseError(f"matrix must be square, got {rows}x{cols}", size_no)
    if rows < 1:
        raise ParseError(f"need at least one row, got {rows}", size_no)
    entries = lines[1:]
    if len(entries) != nnz:
        raise ParseError(f"header declares {nnz} entries but file has {len(entries)}", size_no)
    edges: list[tuple[int, int]] = []
    for lineno, line in entries:
        i, j = _int_pair(line, lineno)
        if not (1 <= i <= rows) or not (1 <= j <= rows):
            raise ParseError(f"entry ({i}, {j}) outside the {rows}x{rows} matrix", lineno)
        if i == j:
            continue  # modified diagonal, not an edge
        edges.append((min(i, j), max(i, j)))
    return edges, rows


def format_edge_list(edges: list[tuple[int, int]], n: int) -> str:
    """Serialize an edge list with an "n m" header, sorted and canonical."""
    canon = sorted({(min(u, v), max(u, v)) for u, v in edges})
    lines = [f"{n} {len(canon)}"]
    lines.extend(f"{u} {v}" for u, v in canon)
    return "\n".join(lines) + "\n"


def format_permutation(perm: VertexPermutation) -> str:
    """Two-column "old new" text, one pair per line."""
    return "\n".join(f"{old} {new}" for old, new in perm.as_pairs()) + "\n"


def parse_permutation(text: str) -> VertexPermutation:
    pairs = {}
    for lineno, line in _data_lines(text):
        old, new = _int_pair(line, lineno)
        if old in pairs:
            raise ParseError(f"label {old} mapped twice", lineno)
        pairs[old] = new
    if sorted(pairs) != list(range(1, len(pairs) + 1)):
        raise ParseError("old labels do not cover 1..n")
    try:
        return VertexPermutation.from_mapping(pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _num_to_str(v) -> str:
    return repr(v) if isinstance(v, float) else str(v)


def _str_to_num(s: str):
    return float(s) if any(c in s for c in ".eEnif") else int(s)


@dataclass(frozen=True)
class TraceDocument:
    """Lossless, line-delimited serialization of one traversal run."""

    n: int
    m: int
    d: int | float
    variant: str
    arithmetic: str
    masking: bool
    regularize_every: int | None
    start: int
    snapshots: bool
    records: tuple[IterationRecord, ...]
    iteration_count: int
    components: tuple[tuple[int, ...], ...]

    @classmethod
    def from_run(
        cls,
        g: Graph,
        cfg: TraversalConfig,
        trace: TraversalTrace,
        components: tuple[tuple[int, ...], ...] | None = None,
    ) -> "TraceDocument":
        cfg = cfg.resolve_d(g)
        snapshots = any(r.state is not None for r in trace.records)
        if components is None:
            components = (tuple(sorted(trace.component)),)
        return cls(
            n=g.n,
            m=g.m,
            d=cfg.d,
            variant=cfg.variant.value,
            arithmetic=cfg.arithmetic.value,
            masking=cfg.masking,
            regularize_every=cfg.regularize_every,
            start=trace.start,
            snapshots=snapshots,
            records=trace.records,
            iteration_count=trace.iteration_count,
            components=components,
        )

    def emit(self) -> str:
        header = {
            "record": "header",
            "schema": TRACE_SCHEMA_VERSION,
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "variant": self.variant,
            "arithmetic": self.arithmetic,
            "masking": self.masking,
            "regularize_every": self.regularize_every,
            "start": self.start,
            "snapshots": self.snapshots,
        }
        lines = [json.dumps(header, sort_keys=True)]
        for r in self.records:
            body = {"record": "iteration", "k": r.k, "frontier": list(r.frontier)}
            if r.state is not None:
                body["state"] = [_num_to_str(v) for v in r.state]
            lines.append(json.dumps(body, sort_keys=True))
        summary = {
            "record": "summary",
            "iterations": self.iteration_count,
            "components": [list(c) for c in self.components],
        }
        lines.append(json.dumps(summary, sort_keys=True))
        return "\n".join(lines) + "\n"


def parse_trace_document(text: str) -> TraceDocument:
    header = None
    records: list[IterationRecord] = []
    summary = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON record: {exc}", lineno) from None
        kind = obj.get("record")
        if kind == "header":
            if obj.get("schema") != TRACE_SCHEMA_VERSION:
                raise ParseError(f"unsupported schema {obj.get('schema')}", lineno)
            header = obj
        elif kind == "iteration":
            state = obj.get("state")
            records.append(
                IterationRecord(
                    k=obj["k"],
                    frontier=tuple(obj["frontier"]),
                    state=None if state is None else tuple(_str_to_num(s) for s in state),
                )
            )
        elif kind == "summary":
            summary = obj
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno)
    if header is None or summary is None:
        raise ParseError("trace document needs header and summary records")
    return TraceDocument(
        n=header["n"],
        m=header["m"],
        d=header["d"],
        variant=header["variant"],
        arithmetic=header["arithmetic"],
        masking=header["masking"],
        regularize_every=header["regularize_every"],
        start=header["start"],
        snapshots=header["snapshots"],
        records=tuple(records),
        iteration_count=summary["iterations"],
        components=tuple(tuple(c) for c in summary["components"]),
    )


def generate_random_graph(
    n: int,
    edge_density: float,
    component_count: int = 1,
    seed: int = 0,
) -> list[tuple[int, int]]:
    """Reproducible random graph with an exact component count.

    Labels are shuffled and split into ``component_count`` groups; each
    group gets a random spanning tree plus extra intra-group edges drawn
    at the requested density (probability per vertex pair).  Density 0
    means no edges at all and therefore requires component_count == n.

    Raises:
        ValueError: for infeasible parameter combinations.
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    if not 0 <= edge_density <= 1:
        raise ValueError(f"edge density must lie in [0, 1], got {edge_density}")
    if not 1 <= component_count <= n:
        raise ValueError(f"component count must lie in [1, {n}], got {component_count}")
    if edge_density == 0 and component_count != n:
        raise ValueError("zero density keeps every vertex isolated; component count must equal n")
    rng = random.Random(seed)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    base, extra = divmod(n, component_count)
    edges: set[tuple[int, int]] = set()
    offset = 0
    for c in range(component_count):
        size = base + (1 if c < extra else 0)
        group = labels[offset : offset + size]
        offset += size
        if edge_density == 0 or size == 1:
            continue
        for idx in range(1, size):  # random spanning tree
            u = group[idx]
            v = group[rng.randrange(idx)]
            edges.add((min(u, v), max(u, v)))
        npairs = size * (size - 1) // 2
        if size <= 512:
            for i in range(size):
                for j in range(i + 1, size):
                    if rng.random() < edge_density:
                        u, v = group[i], group[j]
                        edges.add((min(u, v), max(u, v)))
        else:
            # too many pairs to enumerate: draw the expected number directly
            target = int(round(edge_density * npairs))
            attempts = 0
            while target > 0 and attempts < 20 * target + 100:
                attempts += 1
                u, v = rng.sample(group, 2)
                key = (min(u, v), max(u, v))
                if key not in edges:
                    edges.add(key)
                    target -= 1
    return sorted(edges)
