"""BFS layerings and BFS width.

The BFS width of ``g`` from ``root`` is the size of the largest distance
class around ``root``. Sweeping every root gives the graph's BFS width (the
maximum) and its minimum BFS width.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .exceptions import Disconnected, OutOfRange
from .graph import Graph, LinearLayout, layout_bandwidth
from .ordering import cuthill_mckee, pseudo_peripheral_start

# below this size one BFS per root beats the windowed sweep's setup
BRUTE_FORCE_MAX_N = 2048


@dataclass(frozen=True)
class Layering:
    root: int
    layer_of: np.ndarray
    layers: tuple

    @property
    def width(self) -> int:
        return max(len(layer) for layer in self.layers)

    @property
    def sizes(self) -> np.ndarray:
        return np.array([len(layer) for layer in self.layers], dtype=np.int64)

    @property
    def depth(self) -> int:
        return len(self.layers) - 1


def _check_root(g: Graph, root: int) -> int:
    root = int(root)
    if not 0 <= root < g.n:
        raise OutOfRange(f"root {root} not in 0..{g.n - 1}")
    return root


def distances_from(g: Graph, root: int) -> np.ndarray:
    """Hop distances from ``root``; raises ``Disconnected`` if any vertex is
    unreachable."""
    root = _check_root(g, root)
    dist = _kernels.bfs_distances(g.indptr, g.indices, root)
    if (dist < 0).any():
        raise Disconnected(f"vertex {int(np.argmin(dist))} unreachable from {root}")
    return dist


def bfs_layering(g: Graph, root: int) -> Layering:
    dist = distances_from(g, root)
    order = np.argsort(dist, kind="stable")
    bounds = np.cumsum(np.bincount(dist))
    layers = tuple(np.split(order, bounds[:-1]))
    dist.flags.writeable = False
    for layer in layers:
        layer.flags.writeable = False
    return Layering(int(root), dist, layers)


def bfsw_from(g: Graph, root: int) -> int:
    dist = distances_from(g, root)
    return int(np.bincount(dist).max())


def bfs_widths(g: Graph, layout: LinearLayout | None = None) -> np.ndarray:
    """BFS width from every root, as an array indexed by vertex.

    Small graphs get one BFS per root. Larger graphs use the windowed sweep in
    ``_kernels.all_widths_banded`` over ``layout`` (Cuthill-McKee from a
    pseudo-peripheral vertex when omitted); the result is exact either way,
    the layout only affects speed.
    """
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    distances_from(g, 0)
    if g.n <= BRUTE_FORCE_MAX_N and layout is None:
        return _kernels.all_widths_brute(g.indptr, g.indices).astype(np.int64)
    if layout is None:
        layout = cuthill_mckee(g, pseudo_peripheral_start(g))
    b = layout_bandwidth(g, layout)
    h = g.relabel(layout.order)
    d0 = _kernels.bfs_distances(h.indptr, h.indices, 0)
    dn = _kernels.bfs_distances(h.indptr, h.indices, h.n - 1)
    widths = _kernels.all_widths_banded(h.indptr, h.indices, max(b, 1), d0, dn)
    return widths[layout.position].astype(np.int64)


def bfsw(g: Graph, layout: LinearLayout | None = None) -> tuple[int, int]:
    """Maximum BFS width over all roots and the smallest root attaining it."""
    widths = bfs_widths(g, layout)
    root = int(np.argmax(widths))
    return int(widths[root]), root


def bfsw_min(g: Graph, layout: LinearLayout | None = None) -> tuple[int, int]:
    widths = bfs_widths(g, layout)
    root = int(np.argmin(widths))
    return int(widths[root]), root


def layer_order_layout(g: Graph, root: int) -> LinearLayout:
    """Vertices sorted by BFS layer from ``root``, ties by vertex id.

    Every edge joins equal or adjacent layers, so the bandwidth is at most
    ``2 * bfsw_from(g, root) - 1``.
    """
    dist = distances_from(g, root)
    order = np.lexsort((np.arange(g.n), dist))
    return LinearLayout.from_order(order)
