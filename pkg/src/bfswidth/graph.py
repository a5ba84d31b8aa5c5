"""Immutable graphs, linear layouts and bandwidth lower bounds."""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Iterable

import numpy as np

from . import _kernels
from .exceptions import Disconnected, InvalidEdge, InvalidLayout, OutOfRange


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class Graph:
    """Simple undirected graph on vertices ``0..n-1`` in CSR form.

    Neighbour lists are sorted ascending and stored symmetrically. The arrays
    are read-only, so a graph can be shared freely between workers.
    """

    __slots__ = ("n", "m", "indptr", "indices", "_degrees")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = int(n)
        self.indptr = _frozen(np.ascontiguousarray(indptr, dtype=np.int64))
        self.indices = _frozen(np.ascontiguousarray(indices, dtype=np.int32))
        self.m = int(self.indices.shape[0] // 2)
        self._degrees = None

    @classmethod
    def from_edge_array(cls, n: int, edges: np.ndarray) -> "Graph":
        """Build from an ``(m, 2)`` array of already validated, unique
        edges ``u < v``."""
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        src = np.concatenate([edges[:, 0], edges[:, 1]])
        dst = np.concatenate([edges[:, 1], edges[:, 0]])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n, indptr, dst)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    @property
    def adjacency(self) -> list[np.ndarray]:
        return [self.neighbors(v) for v in range(self.n)]

    @property
    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            self._degrees = _frozen(np.diff(self.indptr))
        return self._degrees

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, 2)`` array with ``u < v``, sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        dst = self.indices.astype(np.int64)
        keep = src < dst
        return np.stack([src[keep], dst[keep]], axis=1)

    def edges(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edge_array()]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < nb.shape[0] and nb[i] == v)

    def relabel(self, order: np.ndarray) -> "Graph":
        """Graph whose vertex ``p`` is this graph's vertex ``order[p]``."""
        position = np.empty(self.n, dtype=np.int64)
        position[np.asarray(order)] = np.arange(self.n)
        e = position[self.edge_array()]
        e.sort(axis=1)
        return Graph.from_edge_array(self.n, e)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self):
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edges: Iterable[tuple[int, int]], n: int) -> Graph:
    """Build a graph from vertex pairs, dropping duplicate edges.

    Raises ``InvalidEdge`` on a self-loop and ``OutOfRange`` when an endpoint
    is not in ``0..n-1``.
    """
    if n < 0:
        raise OutOfRange(f"vertex count must be nonnegative, got {n}")
    e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                   dtype=np.int64)
    if e.size == 0:
        return Graph(n, np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int32))
    if e.ndim != 2 or e.shape[1] != 2:
        raise InvalidEdge("edges must be vertex pairs")
    bad = (e < 0) | (e >= n)
    if bad.any():
        u, v = e[np.nonzero(bad.any(axis=1))[0][0]]
        raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    loops = e[:, 0] == e[:, 1]
    if loops.any():
        u = e[np.argmax(loops), 0]
        raise InvalidEdge(f"self-loop at vertex {u}")
    e = np.sort(e, axis=1)
    e = np.unique(e, axis=0)
    return Graph.from_edge_array(n, e)


class LinearLayout:
    """Bijection between vertices and positions ``0..n-1``.

    ``position[v]`` is the slot of vertex ``v``; ``order[p]`` is the vertex at
    slot ``p``.
    """

    __slots__ = ("position", "order")

    def __init__(self, position):
        position = np.asarray(position, dtype=np.int64)
        n = position.shape[0]
        if position.ndim != 1 or (n and (position.min() < 0 or position.max() >= n)):
            raise InvalidLayout("positions must be a permutation of 0..n-1")
        order = np.full(n, -1, dtype=np.int64)
        order[position] = np.arange(n)
        if n and order.min() < 0:
            raise InvalidLayout("positions must be a permutation of 0..n-1")
        self.position = _frozen(position)
        self.order = _frozen(order)

    @classmethod
    def from_order(cls, order) -> "LinearLayout":
        order = np.asarray(order, dtype=np.int64)
        n = order.shape[0]
        if order.ndim != 1 or (n and (order.min() < 0 or order.max() >= n)):
            raise InvalidLayout("order must be a permutation of 0..n-1")
        position = np.full(n, -1, dtype=np.int64)
        position[order] = np.arange(n)
        if n and position.min() < 0:
            raise InvalidLayout("order must be a permutation of 0..n-1")
        return cls(position)

    @classmethod
    def identity(cls, n: int) -> "LinearLayout":
        return cls(np.arange(n))

    @property
    def n(self) -> int:
        return self.position.shape[0]

    def reversed(self) -> "LinearLayout":
        return LinearLayout(self.n - 1 - self.position)

    def compose(self, other: "LinearLayout") -> "LinearLayout":
        """Apply this layout, then ``other`` to the resulting positions."""
        return LinearLayout(other.position[self.position])

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, LinearLayout):
            return NotImplemented
        return np.array_equal(self.position, other.position)

    def __hash__(self):
        return hash(self.position.tobytes())

    def __repr__(self):
        head = ", ".join(str(int(v)) for v in self.order[:8])
        return f"LinearLayout(order=[{head}{', ...' if self.n > 8 else ''}])"


def _check_layout(g: Graph, layout: LinearLayout):
    if not isinstance(layout, LinearLayout):
        layout = LinearLayout(layout)
    if layout.n != g.n:
        raise InvalidLayout(f"layout covers {layout.n} vertices, graph has {g.n}")
    return layout


def layout_bandwidth(g: Graph, layout: LinearLayout) -> int:
    """Largest ``|position[u] - position[v]|`` over the edges; 0 if none."""
    layout = _check_layout(g, layout)
    if g.m == 0:
        return 0
    e = g.edge_array()
    pos = layout.position
    return int(np.abs(pos[e[:, 0]] - pos[e[:, 1]]).max())


def edge_length(layout: LinearLayout, u: int, v: int) -> int:
    if u == v:
        raise ValueError("edge endpoints must differ")
    return abs(int(layout.position[u]) - int(layout.position[v]))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return bool((_kernels.bfs_distances(g.indptr, g.indices, 0) >= 0).all())


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def degree_lower_bound(g: Graph) -> int:
    """ceil(max_degree / 2)."""
    return ceil(g.max_degree / 2)


def local_density_lower_bound(g: Graph) -> int:
    """Local density: max over vertices v and radii d of ceil(|N(v, d)| / 2d),
    with ``N(v, d)`` the vertices other than ``v`` within distance ``d``."""
    require_connected(g)
    if g.n <= 1:
        return 0
    return int(_kernels.max_local_density(g.indptr, g.indices))
