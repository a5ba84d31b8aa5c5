"""One-shot analysis of a graph, serialisable as versioned JSON."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .exact import DEFAULT_NODE_LIMIT, exact_bandwidth
from .graph import (Graph, degree_lower_bound, layout_bandwidth,
                    local_density_lower_bound, require_connected)
from .layering import bfs_widths, layer_order_layout
from .ordering import cuthill_mckee, pseudo_peripheral_start, reverse_cuthill_mckee

SCHEMA = 1
# exact search is skipped above this size unless forced
EXACT_MAX_N = 20


@dataclass(frozen=True)
class AnalysisReport:
    graph_id: str
    n: int
    m: int
    bfsw: int
    bfsw_root: int
    bfsw_min: int
    bfsw_min_root: int
    degree_lb: int
    density_lb: int
    cm_start: int
    cm_bandwidth: int
    rcm_bandwidth: int
    layer_order_bandwidth: int
    exact_bandwidth: int | None = None
    exact_time_limit_hit: bool | None = None
    cm_ratio_to_exact: float | None = None
    cm_ratio_to_lower_bound: float | None = None

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, **asdict(self)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def analyze(g: Graph, graph_id: str = "", start: int | None = None, exact: bool | None = None,
            node_limit: int = DEFAULT_NODE_LIMIT) -> AnalysisReport:
    """Everything the library measures about ``g`` in one record.

    The layer-order layout is rooted at the minimum-BFS-width vertex.
    ``exact`` defaults to running the exact oracle only when ``n <= 20``.
    """
    require_connected(g)
    if start is None:
        start = pseudo_peripheral_start(g)
    cm = cuthill_mckee(g, start)
    widths = bfs_widths(g, cm)
    hi, lo = int(widths.argmax()), int(widths.argmin())
    degree_lb = degree_lower_bound(g)
    density_lb = local_density_lower_bound(g)
    cm_bw = layout_bandwidth(g, cm)
    lower = max(degree_lb, density_lb)
    fields = dict(
        graph_id=graph_id, n=g.n, m=g.m,
        bfsw=int(widths[hi]), bfsw_root=hi, bfsw_min=int(widths[lo]), bfsw_min_root=lo,
        degree_lb=degree_lb, density_lb=density_lb,
        cm_start=int(start), cm_bandwidth=cm_bw,
        rcm_bandwidth=layout_bandwidth(g, reverse_cuthill_mckee(g, start)),
        layer_order_bandwidth=layout_bandwidth(g, layer_order_layout(g, lo)),
        cm_ratio_to_lower_bound=cm_bw / lower if lower else None,
    )
    if exact is None:
        exact = g.n <= EXACT_MAX_N
    if exact:
        cert = exact_bandwidth(g, node_limit)
        fields.update(exact_bandwidth=cert.optimum, exact_time_limit_hit=cert.time_limit_hit,
                      cm_ratio_to_exact=cm_bw / cert.optimum if cert.optimum else None)
    return AnalysisReport(**fields)
