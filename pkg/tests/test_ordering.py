import numpy as np
import pytest

import bfswidth as B


def tridiagonal(n):
    return B.MatrixPattern(n, [(i, i + 1) for i in range(n - 1)] + [(i, i) for i in range(n)])


def test_pattern_bandwidth():
    assert B.pattern_bandwidth(tridiagonal(5)) == 1
    assert B.pattern_bandwidth(B.MatrixPattern(4, [(i, i) for i in range(4)])) == 0
    t = B.level_tree(2, 2)
    p = B.reorder_pattern(B.MatrixPattern.from_graph(t.graph), t.canonical_layout)
    assert B.pattern_bandwidth(p) == 2


def test_pattern_symmetric_storage():
    p = B.MatrixPattern(3, [(2, 0), (0, 2), (1, 1)])
    assert p.nonzeros == {(0, 2), (1, 1)}
    assert p.to_graph().edges() == [(0, 2)]
    with pytest.raises(B.OutOfRange):
        B.MatrixPattern(3, [(0, 3)])


def test_pattern_from_sparse():
    import scipy.sparse as sp

    a = sp.diags([1, 2, 1], [-1, 0, 1], shape=(4, 4))
    assert B.MatrixPattern.from_sparse(a) == tridiagonal(4)
    with pytest.raises(B.DimensionError):
        B.MatrixPattern.from_sparse(np.ones((2, 3)))


def test_cm_path():
    g = B.baseline("path", 7)
    lay = B.cuthill_mckee(g, 0)
    assert list(lay.order) == list(range(7))
    assert B.layout_bandwidth(g, B.reverse_cuthill_mckee(g, 6)) == 1


def test_cm_star_from_center():
    g = B.baseline("star", 9)
    assert B.layout_bandwidth(g, B.cuthill_mckee(g, 0)) == 8


def test_cm_degree_then_id_order():
    # 0 has neighbours 1 (degree 3), 2 (degree 1), 3 (degree 2)
    g = B.build_graph([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (3, 6)], 7)
    assert list(B.cuthill_mckee(g, 0).order) == [0, 2, 3, 1, 6, 4, 5]


def test_cm_level2_range():
    for j in range(2, 8):
        t = B.level_tree(2, j)
        for fn in (B.cuthill_mckee, B.reverse_cuthill_mckee):
            bw = B.layout_bandwidth(t.graph, fn(t.graph, t.root))
            assert j + 2 <= bw <= 2 * (j + 2) - 1


def test_cm_start_first_and_layer_monotone():
    g = B.level_tree(3, 2).graph
    lay = B.cuthill_mckee(g, 4)
    assert lay.position[4] == 0
    dist = B.bfs_layering(g, 4).layer_of
    assert (np.diff(dist[lay.order]) >= 0).all()


def test_cm_disconnected():
    with pytest.raises(B.Disconnected):
        B.cuthill_mckee(B.build_graph([(0, 1)], 3), 0)


def test_pseudo_peripheral_start():
    assert B.pseudo_peripheral_start(B.baseline("path", 7)) in (0, 6)
    # from the centre one sweep lands on leaf 1, whose eccentricity is 2
    assert B.pseudo_peripheral_start(B.baseline("star", 10)) == 1
    assert B.pseudo_peripheral_start(B.baseline("complete", 5)) == 0
    with pytest.raises(B.Disconnected):
        B.pseudo_peripheral_start(B.build_graph([], 2))


def test_reorder_pattern():
    p = tridiagonal(6)
    assert B.reorder_pattern(p, B.LinearLayout.identity(6)) == p
    assert B.reorder_pattern(p, B.LinearLayout.identity(6).reversed()) == p
    with pytest.raises(B.DimensionError):
        B.reorder_pattern(p, B.LinearLayout.identity(5))


def test_reorder_cm_level2_blowup():
    for j in range(2, 8):
        t = B.level_tree(2, j)
        q = B.reorder_pattern(B.MatrixPattern.from_graph(t.graph), B.cuthill_mckee(t.graph, t.root))
        assert B.pattern_bandwidth(q) >= j + 2
