"""Connected components via state-vector sweep traversals.

The package realizes graph traversal as repeated linear updates of a
per-vertex state vector over a modified adjacency structure: a
Jacobi-style simultaneous update walks the graph exactly like
level-order BFS, while an ascending in-place (Gauss-Seidel-style) sweep
additionally races along label-ascending chains and never needs more
iterations than BFS.  Combinatorial reference traversals, brute-force
chain-contribution checks, level-order renumbering, file formats, a
CLI, and scikit-learn style estimators round out the toolkit.
"""
from .chains import (
    Chain,
    ChainContribution,
    ContributionSum,
    VerificationReport,
    chain_traverse,
    collect_contributions,
    contribution_of,
    enumerate_simple_chains,
    max_chain_length,
    shortest_path_counts,
    verify_contribution_fixtures,
    verify_first_reach_values,
)
from .combinatorial import combinatorial_bfs, combinatorial_ccs, correct_chain_closure
from .engine import (
    Arithmetic,
    DEFAULT_SATURATION_CAP,
    FloatRangeError,
    IterationRecord,
    StateVector,
    TraversalConfig,
    TraversalTrace,
    Variant,
    extract_frontier,
    find_all_components,
    find_connected_component,
    gauss_seidel_step,
    initial_state,
    jacobi_step,
    regularize,
    unsigned_step,
    update_mask,
)
from .estimators import ConnectedComponents, LevelOrderRelabeler, adjacency_to_graph, graph_to_adjacency
from .formats import (
    ParseError,
    TraceDocument,
    format_edge_list,
    format_permutation,
    generate_random_graph,
    parse_edge_list,
    parse_matrix_market,
    parse_permutation,
    parse_trace_document,
)
from .graph import (
    ComponentPartition,
    Graph,
    VertexPermutation,
    apply_permutation,
    build_graph,
    components_union_find,
)
from .renumber import NumberingReport, bfs_order_renumbering, numbering_quality

__version__ = "0.1.0"

__all__ = [
    "Arithmetic",
    "Chain",
    "ChainContribution",
    "ComponentPartition",
    "ConnectedComponents",
    "ContributionSum",
    "DEFAULT_SATURATION_CAP",
    "FloatRangeError",
    "Graph",
    "IterationRecord",
    "LevelOrderRelabeler",
    "NumberingReport",
    "ParseError",
    "StateVector",
    "TraceDocument",
    "TraversalConfig",
    "TraversalTrace",
    "Variant",
    "VerificationReport",
    "VertexPermutation",
    "adjacency_to_graph",
    "apply_permutation",
    "bfs_order_renumbering",
    "build_graph",
    "chain_traverse",
    "collect_contributions",
    "combinatorial_bfs",
    "combinatorial_ccs",
    "components_union_find",
    "contribution_of",
    "correct_chain_closure",
    "enumerate_simple_chains",
    "extract_frontier",
    "find_all_components",
    "find_connected_component",
    "format_edge_list",
    "format_permutation",
    "gauss_seidel_step",
    "generate_random_graph",
    "graph_to_adjacency",
    "initial_state",
    "jacobi_step",
    "max_chain_length",
    "numbering_quality",
    "parse_edge_list",
    "parse_matrix_market",
    "parse_permutation",
    "parse_trace_document",
    "regularize",
    "shortest_path_counts",
    "unsigned_step",
    "update_mask",
    "verify_contribution_fixtures",
    "verify_first_reach_values",
]
