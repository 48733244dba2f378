"""Command-line drivers.

Subcommands: ``components`` (partition a graph), ``trace`` (emit one
traversal as a line-delimited trace document), ``compare`` (iteration
counts of the BFS-equivalent and chain-search sweeps from one start),
``renumber`` (level-order relabeling plus quality report), ``verify``
(chain-contribution self-checks).

Exit codes: 0 success, 1 usage error, 2 parse/input error,
3 verification failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .chains import verify_contribution_fixtures, verify_first_reach_values
from .engine import (
    Arithmetic,
    TraversalConfig,
    Variant,
    find_all_components,
    find_connected_component,
)
from .formats import (
    ParseError,
    TraceDocument,
    format_permutation,
    parse_edge_list,
    parse_matrix_market,
)
from .graph import Graph, build_graph
from .renumber import bfs_order_renumbering, numbering_quality

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VERIFY = 3

# 8-vertex demo graph used by `verify` and the docs
_DEMO_EDGES = [(1, 2), (2, 3), (2, 6), (3, 4), (3, 7), (5, 6), (6, 7), (7, 8)]
_DEMO_N = 8


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this CLI reserves 2 for
    parse errors, so remap usage problems to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="graph file to read")
    p.add_argument(
        "--format",
        choices=("edgelist", "mm"),
        default="edgelist",
        help="input format: whitespace edge list or Matrix Market (default: edgelist)",
    )
    p.add_argument("--d", type=int, default=2, help="diagonal value (default: 2)")


def _add_traversal_options(p: argparse.ArgumentParser, default_variant: str) -> None:
    p.add_argument(
        "--variant",
        choices=tuple(v.value for v in Variant),
        default=default_variant,
        help=f"sweep variant (default: {default_variant})",
    )
    p.add_argument(
        "--arith",
        choices=tuple(a.value for a in Arithmetic),
        default="exact",
        help="arithmetic mode (default: exact)",
    )
    p.add_argument("--mask", action="store_true", help="mask vertices behind the frontier")
    p.add_argument(
        "--regularize-every",
        type=int,
        default=None,
        metavar="M",
        help="rescale float state every M iterations (float mode only)",
    )


def _load_graph(args) -> Graph:
    text = Path(args.input).read_text()
    if args.format == "mm":
        edges, n = parse_matrix_market(text)
    else:
        edges, n = parse_edge_list(text)
    return build_graph(edges, n, d=args.d)


def _build_config(parser: argparse.ArgumentParser, args) -> TraversalConfig:
    try:
        return TraversalConfig(
            variant=Variant(args.variant),
            arithmetic=Arithmetic(args.arith),
            masking=getattr(args, "mask", False),
            regularize_every=getattr(args, "regularize_every", None),
        )
    except ValueError as exc:
        parser.error(str(exc))


def _write_output(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_components(parser, args) -> int:
    cfg = _build_config(parser, args)
    g = _load_graph(args)
    partition = find_all_components(g, cfg)
    print(f"K={partition.k}")
    for idx, members in enumerate(partition.members, start=1):
        listing = ", ".join(str(v) for v in members)
        print(f"component {idx}: {{{listing}}}")
    return EXIT_OK


def _cmd_trace(parser, args) -> int:
    cfg = _build_config(parser, args)
    g = _load_graph(args)
    if not 1 <= args.start <= g.n:
        parser.error(f"start vertex {args.start} outside [1, {g.n}]")
    _, trace = find_connected_component(g, args.start, cfg, snapshot=args.snapshot)
    doc = TraceDocument.from_run(g, cfg, trace)
    _write_output(args, doc.emit())
    return EXIT_OK


def _cmd_compare(parser, args) -> int:
    g = _load_graph(args)
    if not 1 <= args.start <= g.n:
        parser.error(f"start vertex {args.start} outside [1, {g.n}]")
    arith = Arithmetic(args.arith)
    _, bfs = find_connected_component(
        g, args.start, TraversalConfig(variant=Variant.JACOBI, arithmetic=arith)
    )
    _, ccs = find_connected_component(
        g, args.start, TraversalConfig(variant=Variant.GAUSS_SEIDEL, arithmetic=arith)
    )
    n_bfs = bfs.iteration_count
    n_ccs = ccs.iteration_count
    print(f"N_BFS={n_bfs} N_CCS={n_ccs}")
    if n_ccs > n_bfs:
        print(
            f"verification failure: chain search took {n_ccs} iterations, "
            f"more than the {n_bfs} of the BFS sweep",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_renumber(parser, args) -> int:
    g = _load_graph(args)
    if not 1 <= args.root <= g.n:
        parser.error(f"root vertex {args.root} outside [1, {g.n}]")
    perm = bfs_order_renumbering(g, args.root)
    report = numbering_quality(g, args.root)
    header = (
        f"# root={args.root} n_ccs_before={report.n_ccs_before} "
        f"n_ccs_after={report.n_ccs_after} "
        f"correct_edge_fraction={report.correct_edge_fraction:.6f}\n"
    )
    _write_output(args, header + format_permutation(perm))
    return EXIT_OK


def _cmd_verify(parser, args) -> int:
    reports = [verify_contribution_fixtures(d) for d in (2, 3, 5)]
    demo = build_graph(_DEMO_EDGES, _DEMO_N, d=args.d)
    reports.extend(verify_first_reach_values(demo, s) for s in demo.vertices())
    if args.input:
        g = _load_graph(args)
        if g.n > 12:
            parser.error(f"--input graph has {g.n} vertices; value-law checks need n <= 12")
        reports.extend(verify_first_reach_values(g, s) for s in g.vertices())
    failed = False
    for report in reports:
        for line in report.lines():
            print(line)
        failed = failed or not report.ok
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="chainsweep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("components", help="find all connected components")
    _add_input_options(p)
    _add_traversal_options(p, default_variant="unsigned-ccs")
    p.set_defaults(func=_cmd_components)

    p = sub.add_parser("trace", help="emit one traversal as a trace document")
    _add_input_options(p)
    _add_traversal_options(p, default_variant="gauss-seidel")
    p.add_argument("--start", type=int, default=1, help="start vertex (default: 1)")
    p.add_argument("--snapshot", action="store_true", help="include state vectors")
    p.add_argument("--output", help="write to file instead of stdout")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("compare", help="compare BFS and chain-search iteration counts")
    _add_input_options(p)
    p.add_argument("--start", type=int, default=1, help="start vertex (default: 1)")
    p.add_argument(
        "--arith",
        choices=tuple(a.value for a in Arithmetic),
        default="exact",
        help="arithmetic mode (default: exact)",
    )
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("renumber", help="relabel vertices in level order from a root")
    _add_input_options(p)
    p.add_argument("--root", type=int, default=1, help="root vertex (default: 1)")
    p.add_argument("--output", help="write to file instead of stdout")
    p.set_defaults(func=_cmd_renumber)

    p = sub.add_parser("verify", help="run chain-contribution self-checks")
    p.add_argument("--input", help="optional extra graph to check (n <= 12)")
    p.add_argument(
        "--format",
        choices=("edgelist", "mm"),
        default="edgelist",
        help="input format (default: edgelist)",
    )
    p.add_argument("--d", type=int, default=2, help="diagonal value (default: 2)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
