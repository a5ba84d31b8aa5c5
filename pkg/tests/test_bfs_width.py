import numpy as np
import pytest

import bfswidth as B
from oracles import adjacency, all_widths


def test_layering_path_endpoint():
    lay = B.bfs_layering(B.baseline("path", 5), 0)
    assert list(lay.sizes) == [1, 1, 1, 1, 1]
    assert lay.width == 1 and lay.depth == 4


def test_layering_star():
    n = 9
    g = B.baseline("star", n)
    assert list(B.bfs_layering(g, 0).sizes) == [1, n - 1]
    assert list(B.bfs_layering(g, 3).sizes) == [1, 1, n - 2]


def test_layers_sorted_and_consistent():
    g = B.level_tree(3, 2).graph
    lay = B.bfs_layering(g, 5)
    assert list(lay.layers[0]) == [5]
    for i, layer in enumerate(lay.layers):
        assert list(layer) == sorted(layer)
        assert all(lay.layer_of[v] == i for v in layer)


def test_layering_disconnected():
    with pytest.raises(B.Disconnected):
        B.bfs_layering(B.build_graph([(0, 1)], 3), 0)


def test_bfsw_from_examples():
    assert B.bfsw_from(B.baseline("path", 5), 2) == 2
    for j in (2, 3, 5):
        t = B.level_tree(2, j)
        assert B.bfsw_from(t.graph, t.root) == j + 2
        assert B.bfsw_from(t.graph, t.deep_end) == 2


def test_bfsw_examples():
    assert B.bfsw(B.baseline("star", 8)) == (7, 0)
    assert B.bfsw(B.baseline("path", 6)) == (2, 1)
    assert B.bfsw(B.caterpillar(4, 6))[0] <= 6


def test_bfsw_min_examples():
    assert B.bfsw_min(B.baseline("star", 8))[0] == 6
    assert B.bfsw_min(B.baseline("path", 6)) == (1, 0)
    for j in range(1, 6):
        # frozen from exhaustive per-root BFS
        assert B.bfsw_min(B.level_tree(2, j).graph)[0] == 2


def test_witness_is_smallest_id():
    g = B.baseline("cycle", 6)
    assert B.bfsw(g) == (2, 0)
    assert B.bfsw_min(g) == (2, 0)


def test_windowed_sweep_matches_reference():
    rng = np.random.default_rng(3)
    for trial in range(25):
        n = int(rng.integers(2, 300))
        b = int(rng.integers(1, min(n, 6)))
        g, lay = B.random_banded(n, b, float(rng.uniform(0.2, 1.0)), trial)
        ref = all_widths(adjacency(n, g.edges()))
        assert list(B.bfs_widths(g, lay)) == ref
        assert list(B.bfs_widths(g)) == ref


def test_large_graph_uses_windowed_sweep():
    t = B.level_tree(2, 10)
    assert t.n > 2048
    widths = B.bfs_widths(t.graph)
    assert widths[t.root] == 12 and widths.min() == 2


def test_layer_order_layout():
    lay = B.layer_order_layout(B.baseline("path", 5), 0)
    assert list(lay.order) == [0, 1, 2, 3, 4]
    star = B.baseline("star", 10)
    lay = B.layer_order_layout(star, 0)
    assert B.layout_bandwidth(star, lay) == 9
