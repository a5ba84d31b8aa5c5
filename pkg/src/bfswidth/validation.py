"""Coercion of user input into ``Graph`` and ``LinearLayout``."""
from __future__ import annotations

import numpy as np

from .exceptions import DimensionError, InvalidLayout
from .graph import Graph, LinearLayout, build_graph
from .ordering import MatrixPattern


def check_graph(X, n: int | None = None) -> Graph:
    """Accept a ``Graph``, a ``MatrixPattern``, a square sparse or dense
    matrix (nonzero pattern, symmetrised, diagonal ignored) or a sequence of
    edges (``n`` defaults to one more than the largest id). A ``2 x 2`` array is
    read as two edges."""
    if isinstance(X, Graph):
        return X
    if isinstance(X, MatrixPattern):
        return X.to_graph()
    import scipy.sparse as sp

    if sp.issparse(X) or (isinstance(X, np.ndarray) and X.ndim == 2
                          and X.shape[0] == X.shape[1] and X.shape[1] != 2):
        return MatrixPattern.from_sparse(X).to_graph()
    edges = np.asarray(X, dtype=np.int64)
    if edges.size == 0:
        return build_graph([], n or 0)
    if edges.ndim != 2 or edges.shape[1] != 2:
        raise DimensionError(f"expected a square matrix or (m, 2) edges, got shape {edges.shape}")
    if n is None:
        n = int(edges.max()) + 1
    return build_graph(edges, n)


def check_layout(layout, n: int) -> LinearLayout:
    """A ``LinearLayout`` of size ``n``; plain sequences are read as
    ``position`` arrays."""
    if not isinstance(layout, LinearLayout):
        layout = LinearLayout(layout)
    if layout.n != n:
        raise InvalidLayout(f"layout covers {layout.n} vertices, expected {n}")
    return layout
