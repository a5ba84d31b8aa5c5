"""scikit-learn style wrappers.

``CuthillMcKee`` is a transformer over sparse matrices, so it drops into a
``Pipeline`` ahead of a solver. ``BFSWidth`` and ``DistanceOracleReconstructor``
only use the fit / fitted-attribute convention.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import layout_bandwidth
from .layering import bfs_widths
from .ordering import (MatrixPattern, cuthill_mckee, pseudo_peripheral_start,
                       reorder_pattern)
from .reconstruction import open_session, reconstruct
from .validation import check_graph


class CuthillMcKee(TransformerMixin, BaseEstimator):
    """Symmetric reordering ``P A P^T`` by (reverse) Cuthill-McKee."""

    def __init__(self, start=None, reverse=False):
        self.start = start
        self.reverse = reverse

    def fit(self, X, y=None):
        g = check_graph(X)
        self.n_features_in_ = g.n
        self.start_ = pseudo_peripheral_start(g) if self.start is None else int(self.start)
        layout = cuthill_mckee(g, self.start_)
        self.layout_ = layout.reversed() if self.reverse else layout
        self.permutation_ = self.layout_.order
        self.bandwidth_ = layout_bandwidth(g, self.layout_)
        return self

    def transform(self, X):
        """Permute rows and columns of a square matrix; graphs and edge lists
        come back as the reordered ``Graph``."""
        check_is_fitted(self, "layout_")
        import scipy.sparse as sp

        if sp.issparse(X) or (isinstance(X, np.ndarray) and X.ndim == 2 and X.shape[0] == X.shape[1]
                              and X.shape[0] == self.n_features_in_):
            p = self.permutation_
            if sp.issparse(X):
                return sp.csr_matrix(X)[p][:, p]
            return np.asarray(X)[np.ix_(p, p)]
        g = check_graph(X, self.n_features_in_)
        return reorder_pattern(MatrixPattern.from_graph(g), self.layout_).to_graph()


class BFSWidth(BaseEstimator):
    """Per-root BFS widths of one connected graph."""

    def fit(self, X, y=None):
        g = check_graph(X)
        self.widths_ = bfs_widths(g)
        self.bfsw_root_ = int(self.widths_.argmax())
        self.bfsw_ = int(self.widths_[self.bfsw_root_])
        self.bfsw_min_root_ = int(self.widths_.argmin())
        self.bfsw_min_ = int(self.widths_[self.bfsw_min_root_])
        return self


class DistanceOracleReconstructor(BaseEstimator):
    """Fit on a hidden graph: recovers its edges through distance queries."""

    def __init__(self, root=0):
        self.root = root

    def fit(self, X, y=None):
        session = open_session(check_graph(X), record=False)
        res = reconstruct(session, self.root)
        self.edges_ = res.edge_array()
        self.queries_used_ = res.queries_used
        self.candidate_pairs_ = res.candidate_pairs
        return self
