"""Deterministic graph families: level-k trees and their low-bandwidth
layouts, caterpillars, the subdivided star, baselines and random banded
graphs.

Level-k trees
-------------
``T(1, j)`` used as a building block is a path of height ``2**j - 1``. For
``k >= 2``, ``T(k, j)`` is a spine path of height ``h = 2**j + k - 2`` with a
copy of ``T(k - 1, i)`` hung by one edge from spine vertex ``v_i`` for each
``i = 0..j``. ``v_i`` sits at depth ``2**j - 2**i`` below the root ``v_j``,
which puts every leaf at depth ``h``.

Vertex ids: the spine comes first, ``0`` being the deep end ``v_s`` and ``h``
the root ``v_j`` (so ``v_i`` has id ``2**i + k - 2``), followed by the
subtrees ``T(k-1, 0), ..., T(k-1, j)``, each numbered by the same rule.

Canonical layout: the spine below ``v_0``, then for ``i < j`` a block that
interleaves the spine segment from ``v_i`` up to ``v_{i+1}`` with
subtree ``i`` (one spine vertex, then ``ceil(n_{k-1,i} / 2**i)`` subtree
vertices, then whatever remains), then ``v_j`` and subtree ``j``.
Subtrees are laid out root first; that layout is the reversal of a layout
with the root at the far end, obtained by proportionally merging subtree
``j`` (reversed) into the canonical prefix.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exceptions import InvalidParams
from .graph import Graph, LinearLayout, build_graph


@dataclass(frozen=True)
class LevelTree:
    k: int
    j: int
    graph: Graph
    canonical_layout: LinearLayout
    spine: np.ndarray
    subtree_roots: np.ndarray
    height: int
    mirrored: bool = False

    @property
    def root(self) -> int:
        """``v_j``: the spine end every leaf is equally far from."""
        return int(self.spine[-1])

    @property
    def deep_end(self) -> int:
        """``v_s``: the other end of the spine."""
        return int(self.spine[0])

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class _Piece:
    n: int
    edges: np.ndarray
    root: int
    prefix: np.ndarray      # spine tail + blocks + root
    last_subtree: np.ndarray  # root-first layout of subtree j, already offset
    start: np.ndarray       # root-first layout of the whole tree


def _interleave(spine: np.ndarray, sub: np.ndarray, chunk: int) -> np.ndarray:
    a = np.arange(spine.shape[0])
    b = np.arange(sub.shape[0])
    keys = np.concatenate([a * (chunk + 1), (b // chunk) * (chunk + 1) + 1 + b % chunk])
    return np.concatenate([spine, sub])[np.argsort(keys, kind="stable")]


def _merge(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Spread ``x`` and ``y`` evenly over one sequence, both ending last."""
    p, q = x.shape[0], y.shape[0]
    if p == 0 or q == 0:
        return np.concatenate([x, y])
    kx = (np.arange(p, dtype=np.int64) + 1) * q
    ky = (np.arange(q, dtype=np.int64) + 1) * p
    keys = np.concatenate([kx, ky])
    tie = np.concatenate([np.zeros(p, np.int8), np.ones(q, np.int8)])
    return np.concatenate([x, y])[np.lexsort((tie, keys))]


def _frozen(a):
    a.flags.writeable = False
    return a


@lru_cache(maxsize=None)
def _piece(k: int, j: int) -> _Piece:
    if k == 1:
        n = 2 ** j
        ids = np.arange(n, dtype=np.int64)
        edges = np.stack([ids[:-1], ids[1:]], axis=1)
        start = ids[::-1].copy()
        return _Piece(n, _frozen(edges), n - 1, _frozen(start), _frozen(start[:0]),
                      _frozen(start))
    h = 2 ** j + k - 2
    spine = np.arange(h + 1, dtype=np.int64)
    edge_parts = [np.stack([spine[:-1], spine[1:]], axis=1)]
    offset = h + 1
    blocks = [spine[:k - 1]]
    last = None
    for i in range(j + 1):
        sub = _piece(k - 1, i)
        v_i = 2 ** i + k - 2
        edge_parts.append(sub.edges + offset)
        edge_parts.append(np.array([[v_i, sub.root + offset]], dtype=np.int64))
        sub_start = sub.start + offset
        if i < j:
            segment = spine[v_i:2 ** (i + 1) + k - 2]
            chunk = -(-sub.n // 2 ** i)
            blocks.append(_interleave(segment, sub_start, chunk))
        else:
            last = sub_start
        offset += sub.n
    blocks.append(spine[h:])
    prefix = np.concatenate(blocks)
    end = np.concatenate([_merge(prefix[:-1], last[::-1]), prefix[-1:]])
    return _Piece(offset, _frozen(np.concatenate(edge_parts)), h, _frozen(prefix),
                  _frozen(last), _frozen(end[::-1].copy()))


def _check_level_params(k, j):
    if not isinstance(k, (int, np.integer)) or not isinstance(j, (int, np.integer)):
        raise InvalidParams("k and j must be integers")
    if k < 1 or j < 1:
        raise InvalidParams(f"need k >= 1 and j >= 1, got k={k}, j={j}")


def level_tree(k: int, j: int) -> LevelTree:
    """Level-``k`` tree with height exponent ``j``.

    ``k == 1`` gives a path with ``j`` edges rooted at vertex ``j``.
    """
    _check_level_params(k, j)
    k, j = int(k), int(j)
    if k == 1:
        ids = np.arange(j + 1, dtype=np.int64)
        g = Graph.from_edge_array(j + 1, np.stack([ids[:-1], ids[1:]], axis=1))
        return LevelTree(1, j, g, LinearLayout.identity(j + 1), _frozen(ids),
                         _frozen(np.zeros(0, np.int64)), j)
    piece = _piece(k, j)
    g = Graph.from_edge_array(piece.n, piece.edges)
    canon = LinearLayout.from_order(np.concatenate([piece.prefix, piece.last_subtree]))
    h = piece.root
    roots = np.array([2 ** i + k - 2 for i in range(j + 1)], dtype=np.int64)
    return LevelTree(k, j, g, canon, _frozen(np.arange(h + 1, dtype=np.int64)),
                     _frozen(roots), h)


def mirrored_level_tree(k: int, j: int) -> LevelTree:
    """Two copies of ``level_tree(k, j)`` sharing their root.

    Copy A keeps its ids; copy B's non-root vertices follow. The layout puts
    the shared root in the middle with copy A (root-last layout) on the left
    and copy B mirrored on the right, so its bandwidth does not depend on
    ``j`` while every root sees a full copy beyond the shared root.
    """
    _check_level_params(k, j)
    k, j = int(k), int(j)
    base = level_tree(k, j)
    n, r = base.n, base.root
    if k == 1:
        root_last = np.arange(n, dtype=np.int64)
    else:
        root_last = _piece(k, j).start[::-1]

    def copy_b(x):
        x = np.asarray(x, dtype=np.int64)
        return np.where(x == r, r, n + x - (x > r))

    e = base.graph.edge_array()
    edges = np.concatenate([e, np.sort(copy_b(e), axis=1)])
    g = Graph.from_edge_array(2 * n - 1, edges)
    order = np.concatenate([root_last, copy_b(root_last[-2::-1])])
    return LevelTree(k, j, g, LinearLayout.from_order(order), base.spine,
                     base.subtree_roots, base.height, mirrored=True)


def caterpillar(delta: int, spine_len: int) -> Graph:
    """Path ``0..spine_len-1`` whose interior vertices get ``delta - 2`` pendant
    leaves each."""
    if delta < 2 or spine_len < 2:
        raise InvalidParams(f"need delta >= 2 and spine_len >= 2, got {delta}, {spine_len}")
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    nxt = spine_len
    for v in range(1, spine_len - 1):
        for _ in range(delta - 2):
            edges.append((v, nxt))
            nxt += 1
    return build_graph(edges, nxt)


def star_subdivision(s: int) -> tuple[Graph, LinearLayout]:
    """Star with ``s`` rays, each ray subdivided ``s`` times and ending in a
    vertex ``b_i`` that carries ``s`` extra leaves.

    Ids: centre ``0``; ray ``i`` vertex ``t`` (``t = 1..s`` from the centre)
    is ``1 + i*s + t - 1``; ``b_i`` is ``1 + s*s + i``; leaf ``l`` of ``b_i`` is
    ``1 + s*s + s + i*s + l``.

    The layout goes block by block, ``i = 0..s-1``, then the centre. Block
    ``i`` holds the leaves of ``b_i``, ``b_i``, the last ``i + 1`` ray vertices
    of ray ``i`` walking away from ``b_i``, then one vertex of every earlier
    ray, which threads each ray through all later blocks. Its bandwidth is
    at most ``3s``.
    """
    if s < 2:
        raise InvalidParams(f"need s >= 2, got {s}")
    n = 2 * s * s + s + 1

    def ray(i, t):
        return 1 + i * s + t - 1

    def b(i):
        return 1 + s * s + i

    def leaf(i, l):
        return 1 + s * s + s + i * s + l

    edges = []
    for i in range(s):
        edges.append((0, ray(i, 1)))
        edges.extend((ray(i, t), ray(i, t + 1)) for t in range(1, s))
        edges.append((ray(i, s), b(i)))
        edges.extend((b(i), leaf(i, l)) for l in range(s))
    order = []
    for m in range(s):
        order.extend(leaf(m, l) for l in range(s))
        order.append(b(m))
        order.extend(ray(m, t) for t in range(s, s - m - 1, -1))
        order.extend(ray(i, s - m) for i in range(m - 1, -1, -1))
    order.append(0)
    return build_graph(edges, n), LinearLayout.from_order(order)


def baseline(kind: str, n: int) -> Graph:
    """``path``, ``star`` (centre 0), ``cycle`` or ``complete`` on ``n`` vertices."""
    if n < 1 or (kind == "cycle" and n < 3):
        raise InvalidParams(f"{kind} needs more vertices than {n}")
    if kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "star":
        edges = [(0, i) for i in range(1, n)]
    elif kind == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif kind == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    else:
        raise InvalidParams(f"unknown family {kind!r}")
    return build_graph(edges, n)


def random_banded(n: int, b: int, density: float, seed: int) -> tuple[Graph, LinearLayout]:
    """Connected random graph whose identity layout has bandwidth <= ``b``.

    Every pair ``i < j`` with ``j - i <= b`` is kept with probability
    ``density``. Components are then joined left to right with ``(i, i+1)``
    edges.
    """
    if not (1 <= b < n) or not (0 < density <= 1):
        raise InvalidParams(f"need 1 <= b < n and 0 < density <= 1, got n={n}, b={b}, "
                            f"density={density}")
    import scipy.sparse as sp
    from scipy.sparse.csgraph import connected_components

    rng = np.random.default_rng(seed)
    parts = []
    for d in range(1, b + 1):
        i = np.arange(n - d, dtype=np.int64)
        keep = rng.random(n - d) < density
        parts.append(np.stack([i[keep], i[keep] + d], axis=1))
    e = np.concatenate(parts)
    adj = sp.coo_matrix((np.ones(len(e)), (e[:, 0], e[:, 1])), shape=(n, n))
    ncomp, labels = connected_components(adj, directed=False)
    if ncomp > 1:
        parent = list(range(ncomp))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        patch = []
        for i in np.nonzero(labels[:-1] != labels[1:])[0]:
            ra, rb = find(labels[i]), find(labels[i + 1])
            if ra != rb:
                parent[ra] = rb
                patch.append((i, i + 1))
        e = np.concatenate([e, np.array(patch, dtype=np.int64)])
    return build_graph(e, n), LinearLayout.identity(n)
