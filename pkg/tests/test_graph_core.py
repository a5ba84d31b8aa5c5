import numpy as np
import pytest

import bfswidth as B
from oracles import adjacency, brute_local_density


def test_build_graph_path():
    g = B.build_graph([(0, 1), (1, 2)], 3)
    assert (g.n, g.m) == (3, 2)
    assert [list(a) for a in g.adjacency] == [[1], [0, 2], [1]]


def test_build_graph_dedup():
    g = B.build_graph([(0, 1), (0, 1), (1, 0)], 2)
    assert g.m == 1


def test_build_graph_rejects_self_loop():
    with pytest.raises(B.InvalidEdge):
        B.build_graph([(0, 0)], 1)


def test_build_graph_rejects_out_of_range():
    with pytest.raises(B.OutOfRange):
        B.build_graph([(0, 3)], 3)


def test_adjacency_sorted_and_symmetric():
    g = B.build_graph([(3, 0), (2, 0), (1, 3), (0, 1)], 4)
    for v, nb in enumerate(g.adjacency):
        assert list(nb) == sorted(nb)
        for u in nb:
            assert v in g.neighbors(u)


def test_graph_is_immutable():
    g = B.baseline("path", 4)
    with pytest.raises(ValueError):
        g.indices[0] = 3


def test_layout_bandwidth_examples():
    p3 = B.baseline("path", 3)
    assert B.layout_bandwidth(p3, B.LinearLayout.identity(3)) == 1
    k3 = B.baseline("complete", 3)
    for order in ([0, 1, 2], [2, 0, 1], [1, 2, 0]):
        assert B.layout_bandwidth(k3, B.LinearLayout.from_order(order)) == 2
    assert B.layout_bandwidth(B.build_graph([], 5), B.LinearLayout.identity(5)) == 0


def test_level2_canonical_bandwidth():
    t = B.level_tree(2, 3)
    assert B.layout_bandwidth(t.graph, t.canonical_layout) == 2


def test_layout_must_be_bijection():
    with pytest.raises(B.InvalidLayout):
        B.LinearLayout([0, 0, 1])
    with pytest.raises(B.InvalidLayout):
        B.layout_bandwidth(B.baseline("path", 3), B.LinearLayout.identity(4))


def test_layout_order_inverse():
    lay = B.LinearLayout([2, 0, 1])
    assert list(lay.order) == [1, 2, 0]
    assert all(lay.order[lay.position[v]] == v for v in range(3))


def test_edge_length():
    lay = B.LinearLayout(np.arange(6))
    assert B.edge_length(lay, 3, 4) == 1
    assert B.edge_length(lay, 0, 5) == 5
    with pytest.raises(ValueError):
        B.edge_length(lay, 2, 2)


def test_is_connected():
    assert B.is_connected(B.baseline("path", 3))
    assert not B.is_connected(B.build_graph([], 2))
    assert B.is_connected(B.baseline("star", 5))


def test_degree_lower_bound():
    assert B.degree_lower_bound(B.baseline("star", 10)) == 5
    assert B.degree_lower_bound(B.baseline("path", 6)) == 1
    assert B.degree_lower_bound(B.baseline("complete", 5)) == 2


def test_local_density_lower_bound():
    assert B.local_density_lower_bound(B.baseline("star", 10)) == 5
    # frozen from the brute-force enumeration over all (v, d)
    assert B.local_density_lower_bound(B.baseline("path", 5)) == 1
    assert B.local_density_lower_bound(B.baseline("complete", 4)) == 2


def test_local_density_matches_brute_force():
    for g in (B.level_tree(3, 2).graph, B.star_subdivision(3)[0], B.caterpillar(5, 6)):
        assert B.local_density_lower_bound(g) == brute_local_density(adjacency(g.n, g.edges()))


def test_local_density_needs_connected():
    with pytest.raises(B.Disconnected):
        B.local_density_lower_bound(B.build_graph([(0, 1)], 3))


def test_relabel_matches_layout():
    g = B.level_tree(2, 3).graph
    lay = B.cuthill_mckee(g)
    h = g.relabel(lay.order)
    assert B.layout_bandwidth(h, B.LinearLayout.identity(g.n)) == B.layout_bandwidth(g, lay)
