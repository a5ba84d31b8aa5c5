"""Cuthill-McKee orderings and symmetric sparsity patterns."""
from __future__ import annotations

import numpy as np

from . import _kernels
from .exceptions import DimensionError, Disconnected, OutOfRange
from .graph import Graph, LinearLayout


class MatrixPattern:
    """Nonzero pattern of a symmetric ``n x n`` matrix.

    Entries are kept once, as ``(i, j)`` with ``i <= j``, sorted. Diagonal
    entries are retained but never count toward bandwidth.
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries=()):
        e = np.asarray(list(entries) if not isinstance(entries, np.ndarray) else entries,
                       dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= n):
            raise OutOfRange(f"pattern entry outside 0..{n - 1}")
        e = np.unique(np.sort(e, axis=1), axis=0)
        e.flags.writeable = False
        self.n = int(n)
        self.entries = e

    @classmethod
    def from_graph(cls, g: Graph, diagonal: bool = False) -> "MatrixPattern":
        e = g.edge_array()
        if diagonal:
            d = np.arange(g.n, dtype=np.int64)
            e = np.concatenate([e, np.stack([d, d], axis=1)])
        return cls(g.n, e)

    @classmethod
    def from_sparse(cls, matrix) -> "MatrixPattern":
        """Pattern of a square scipy sparse or dense matrix, symmetrised."""
        import scipy.sparse as sp

        a = sp.coo_matrix(matrix)
        if a.shape[0] != a.shape[1]:
            raise DimensionError(f"matrix is {a.shape[0]}x{a.shape[1]}, not square")
        keep = a.data != 0
        return cls(a.shape[0], np.stack([a.row[keep], a.col[keep]], axis=1))

    @property
    def nonzeros(self) -> frozenset:
        return frozenset((int(i), int(j)) for i, j in self.entries)

    @property
    def off_diagonal(self) -> np.ndarray:
        return self.entries[self.entries[:, 0] != self.entries[:, 1]]

    def to_graph(self) -> Graph:
        return Graph.from_edge_array(self.n, self.off_diagonal)

    def to_sparse(self):
        import scipy.sparse as sp

        e = self.entries
        rows = np.concatenate([e[:, 0], e[e[:, 0] != e[:, 1], 1]])
        cols = np.concatenate([e[:, 1], e[e[:, 0] != e[:, 1], 0]])
        return sp.csr_matrix((np.ones(rows.shape[0], dtype=np.int8), (rows, cols)),
                             shape=(self.n, self.n))

    def __eq__(self, other):
        if not isinstance(other, MatrixPattern):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.n, self.entries.tobytes()))

    def __repr__(self):
        return f"MatrixPattern(n={self.n}, nnz={len(self.entries)})"


def pattern_bandwidth(p: MatrixPattern) -> int:
    """max |i - j| over off-diagonal nonzeros, 0 when there are none."""
    if len(p.entries) == 0:
        return 0
    return int((p.entries[:, 1] - p.entries[:, 0]).max())


def reorder_pattern(p: MatrixPattern, layout: LinearLayout) -> MatrixPattern:
    """The pattern of ``P A P^T``: entry ``(i, j)`` moves to
    ``(position[i], position[j])``."""
    if layout.n != p.n:
        raise DimensionError(f"layout has {layout.n} positions, pattern is {p.n}x{p.n}")
    return MatrixPattern(p.n, layout.position[p.entries])


def _degree_sorted_csr(g: Graph) -> np.ndarray:
    """Indices array with each neighbour list sorted by (degree, id)."""
    src = np.repeat(np.arange(g.n), g.degrees)
    nbr = g.indices.astype(np.int64)
    order = np.lexsort((nbr, g.degrees[nbr], src))
    return nbr[order].astype(np.int32)


def _check_start(g: Graph, start: int) -> int:
    start = int(start)
    if not 0 <= start < g.n:
        raise OutOfRange(f"start vertex {start} not in 0..{g.n - 1}")
    return start


def cuthill_mckee(g: Graph, start: int | None = None) -> LinearLayout:
    """Cuthill-McKee layout: BFS from ``start`` where each dequeued vertex
    appends its unvisited neighbours by ascending degree, ties by id.

    ``start`` defaults to :func:`pseudo_peripheral_start`.
    """
    if start is None:
        start = pseudo_peripheral_start(g)
    start = _check_start(g, start)
    order = _kernels.bfs_order(g.indptr, _degree_sorted_csr(g), start)
    if order.shape[0] != g.n:
        raise Disconnected(f"{g.n - order.shape[0]} vertices unreachable from {start}")
    return LinearLayout.from_order(order)


def reverse_cuthill_mckee(g: Graph, start: int | None = None) -> LinearLayout:
    return cuthill_mckee(g, start).reversed()


def pseudo_peripheral_start(g: Graph, initial: int = 0) -> int:
    """George-Liu sweep: hop to a minimum-degree vertex of the last BFS layer
    while that raises the eccentricity."""
    if g.n == 0:
        raise OutOfRange("empty graph has no start vertex")
    v = _check_start(g, initial)
    dist = _kernels.bfs_distances(g.indptr, g.indices, v)
    if (dist < 0).any():
        raise Disconnected("graph is not connected")
    ecc = int(dist.max())
    while True:
        last = np.nonzero(dist == ecc)[0]
        u = int(last[np.lexsort((last, g.degrees[last]))[0]])
        dist_u = _kernels.bfs_distances(g.indptr, g.indices, u)
        ecc_u = int(dist_u.max())
        if ecc_u <= ecc:
            return v
        v, dist, ecc = u, dist_u, ecc_u
