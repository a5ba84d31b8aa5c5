"""Exact minimum bandwidth for small graphs by branch and bound.

Vertices are placed left to right. For a target bandwidth ``b`` every
unplaced vertex ``x`` gets a deadline, the last position it may take:
``min(pos[u] + b * dist(u, x))`` over placed ``u``. A partial layout is
dropped as soon as the deadlines cannot all be met (sorted deadlines must
satisfy ``deadline[i] >= next_position + i``).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .exceptions import Indeterminate
from .graph import (Graph, LinearLayout, degree_lower_bound, layout_bandwidth,
                    local_density_lower_bound, require_connected)
from .ordering import cuthill_mckee

DEFAULT_NODE_LIMIT = 10 ** 7


@dataclass(frozen=True)
class BandwidthCertificate:
    optimum: int
    witness: LinearLayout
    explored_nodes: int
    time_limit_hit: bool = False


class _Search:
    def __init__(self, g: Graph, node_limit: int):
        self.n = g.n
        self.dist = _kernels.all_pairs_distances(g.indptr, g.indices).tolist()
        self.nbrs = [set(int(u) for u in g.neighbors(v)) for v in range(g.n)]
        self.node_limit = node_limit
        self.nodes = 0

    def feasible(self, b: int):
        """A layout order of bandwidth <= b, or None."""
        n = self.n
        inf = n * (b + 1)
        self.order = []
        self.placed_nbrs = [0] * n
        for first in range(n):
            if self._extend(b, [inf] * n, first):
                return list(self.order)
        return None

    def _extend(self, b, deadline, v):
        # place v at the next free position
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise Indeterminate(f"node limit {self.node_limit} reached", self.nodes)
        p = len(self.order)
        if deadline[v] < p:
            return False
        self.order.append(v)
        for u in self.nbrs[v]:
            self.placed_nbrs[u] += 1
        if p + 1 == self.n:
            return True
        placed = set(self.order)
        drow = self.dist[v]
        new_deadline = [min(deadline[x], p + b * drow[x]) for x in range(self.n)]
        rest = [x for x in range(self.n) if x not in placed]
        ds = sorted(new_deadline[x] for x in rest)
        ok = all(d >= p + 1 + i for i, d in enumerate(ds))
        if ok:
            if ds[0] == p + 1:
                cands = [x for x in rest if new_deadline[x] == p + 1]
            else:
                cands = sorted(rest, key=lambda x: (-self.placed_nbrs[x], x))
            for x in cands:
                if self._extend(b, new_deadline, x):
                    return True
        self.order.pop()
        for u in self.nbrs[v]:
            self.placed_nbrs[u] -= 1
        return False


def is_bandwidth_at_most(g: Graph, b: int, node_limit: int = DEFAULT_NODE_LIMIT) -> bool:
    """Whether some layout of ``g`` has bandwidth at most ``b``.

    Raises ``Indeterminate`` when the search exceeds ``node_limit`` nodes.
    """
    require_connected(g)
    if b < 0:
        return False
    if g.n <= 1 or b >= g.n - 1:
        return True
    if b < max(degree_lower_bound(g), local_density_lower_bound(g)):
        return False
    return _Search(g, node_limit).feasible(b) is not None


def exact_bandwidth(g: Graph, node_limit: int = DEFAULT_NODE_LIMIT) -> BandwidthCertificate:
    """Minimum bandwidth of ``g`` with a witness layout.

    Bounds start at the larger lower-bound certificate and the Cuthill-McKee
    layout; each ``b`` in between is tried in increasing order. If the node
    budget runs out the best layout found so far is returned with
    ``time_limit_hit`` set.
    """
    require_connected(g)
    if g.n <= 1:
        return BandwidthCertificate(0, LinearLayout.identity(g.n), 0)
    best = cuthill_mckee(g)
    upper = layout_bandwidth(g, best)
    lower = max(degree_lower_bound(g), local_density_lower_bound(g))
    search = _Search(g, node_limit)
    for b in range(lower, upper):
        try:
            order = search.feasible(b)
        except Indeterminate:
            return BandwidthCertificate(upper, best, search.nodes, True)
        if order is not None:
            witness = LinearLayout.from_order(np.array(order))
            return BandwidthCertificate(layout_bandwidth(g, witness), witness, search.nodes)
    return BandwidthCertificate(upper, best, search.nodes)
