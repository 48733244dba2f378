"""scikit-learn style estimators wrapping the sweep engine.

``ConnectedComponents`` follows the clustering API: ``fit`` on an
adjacency matrix, component labels in ``labels_``, and ``fit_predict``
for pipelines.  ``LevelOrderRelabeler`` is a transformer that learns a
level-order vertex permutation from a root and relabels adjacency
structures with it.

Input can be a :class:`~chainsweep.graph.Graph`, a scipy sparse matrix,
or a dense array; matrices must be square with a symmetric nonzero
pattern, row/column index i standing for vertex label i+1.  Diagonal
entries are ignored.
"""
from __future__ import annotations

import numpy as np
from scipy import sparse
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .engine import Arithmetic, DEFAULT_SATURATION_CAP, TraversalConfig, Variant, find_all_components
from .graph import Graph, apply_permutation, build_graph
from .renumber import bfs_order_renumbering

__all__ = ["ConnectedComponents", "LevelOrderRelabeler", "adjacency_to_graph", "graph_to_adjacency"]


def adjacency_to_graph(X, d: int | float = 2) -> Graph:
    """Coerce an adjacency structure to a :class:`Graph`.

    Accepts a Graph (rebuilt only if its diagonal value differs), a
    scipy sparse matrix, or anything ``np.asarray`` turns into a square
    2-D array.  Any nonzero off-diagonal entry is an edge.
    """
    if isinstance(X, Graph):
        if X.d == d:
            return X
        return build_graph(X.edges(), X.n, d=d)
    if sparse.issparse(X):
        coo = X.tocoo()
        if coo.shape[0] != coo.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got {coo.shape}")
        pattern = {(i, j) for i, j, v in zip(coo.row, coo.col, coo.data) if v != 0 and i != j}
        if any((j, i) not in pattern for i, j in pattern):
            raise ValueError("adjacency pattern must be symmetric")
        n = coo.shape[0]
        edges = [(int(i) + 1, int(j) + 1) for i, j in pattern if i < j]
        return build_graph(edges, n, d=d)
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"adjacency matrix must be square 2-D, got shape {arr.shape}")
    if ((arr != 0) != (arr != 0).T).any():
        raise ValueError("adjacency pattern must be symmetric")
    n = arr.shape[0]
    edges = [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if arr[i, j] != 0
    ]
    return build_graph(edges, n, d=d)


def graph_to_adjacency(g: Graph, like=None):
    """Render a graph as the same kind of adjacency structure as ``like``."""
    if like is None or isinstance(like, Graph):
        return g
    rows = []
    cols = []
    for u, v in g.edges():
        rows.extend((u - 1, v - 1))
        cols.extend((v - 1, u - 1))
    mat = sparse.coo_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(g.n, g.n)
    )
    if sparse.issparse(like):
        return mat.tocsr()
    return mat.toarray()


class ConnectedComponents(ClusterMixin, BaseEstimator):
    """Connected-component labeling via sweep traversals.

    Parameters mirror :class:`~chainsweep.engine.TraversalConfig`; the
    default unsigned variant is the cancellation-free detection mode.

    Attributes after ``fit``:
        labels_: 0-based component index per vertex (ndarray, shape (n,)).
        n_components_: number of components.
        partition_: the full :class:`~chainsweep.graph.ComponentPartition`.
    """

    def __init__(
        self,
        variant: str = "unsigned-ccs",
        arithmetic: str = "exact",
        d: int | float = 2,
        masking: bool = False,
        regularize_every: int | None = None,
        saturation_cap: int = DEFAULT_SATURATION_CAP,
    ):
        self.variant = variant
        self.arithmetic = arithmetic
        self.d = d
        self.masking = masking
        self.regularize_every = regularize_every
        self.saturation_cap = saturation_cap

    def _config(self) -> TraversalConfig:
        return TraversalConfig(
            variant=Variant(self.variant),
            arithmetic=Arithmetic(self.arithmetic),
            masking=self.masking,
            regularize_every=self.regularize_every,
            saturation_cap=self.saturation_cap,
        )

    def fit(self, X, y=None):
        cfg = self._config()
        g = adjacency_to_graph(X, d=self.d)
        partition = find_all_components(g, cfg)
        self.partition_ = partition
        self.labels_ = np.asarray(partition.assignment, dtype=np.int64) - 1
        self.n_components_ = partition.k
        self.n_features_in_ = g.n
        return self


class LevelOrderRelabeler(TransformerMixin, BaseEstimator):
    """Relabel vertices in traversal level order from a root.

    After the learned permutation is applied, every vertex of the
    root's component is reachable from the root along a label-ascending
    chain, so the chain-search sweep finishes in one iteration.

    Attributes after ``fit``:
        permutation_: the learned old-to-new relabeling.
    """

    def __init__(self, root: int = 1):
        self.root = root

    def fit(self, X, y=None):
        g = adjacency_to_graph(X)
        if not 1 <= self.root <= g.n:
            raise ValueError(f"root {self.root} outside [1, {g.n}]")
        self.permutation_ = bfs_order_renumbering(g, self.root)
        self.n_features_in_ = g.n
        return self

    def transform(self, X):
        check_is_fitted(self, "permutation_")
        g = adjacency_to_graph(X)
        if g.n != self.permutation_.n:
            raise ValueError(
                f"graph has {g.n} vertices but permutation was learned on {self.permutation_.n}"
            )
        return graph_to_adjacency(apply_permutation(g, self.permutation_), like=X)
