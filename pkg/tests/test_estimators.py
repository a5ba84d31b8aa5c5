import numpy as np
import pytest
import scipy.sparse as sp
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

import bfswidth as B
from bfswidth.estimators import BFSWidth, CuthillMcKee, DistanceOracleReconstructor
from bfswidth.validation import check_graph, check_layout


def test_check_graph_inputs():
    g = B.baseline("path", 4)
    a = sp.diags([1, 1], [-1, 1], shape=(4, 4))
    assert check_graph(g) is g
    assert check_graph(a) == g
    assert check_graph(a.toarray()) == g
    assert check_graph([(0, 1), (1, 2), (2, 3)]) == g
    assert check_graph(B.MatrixPattern.from_graph(g)) == g
    assert check_graph([], n=3).n == 3
    with pytest.raises(B.DimensionError):
        check_graph(np.zeros((3, 3, 3)))


def test_check_layout():
    assert check_layout([1, 0, 2], 3).order.tolist() == [1, 0, 2]
    with pytest.raises(B.InvalidLayout):
        check_layout([0, 1], 3)


def test_cuthill_mckee_transformer():
    t = B.level_tree(2, 4)
    a = B.MatrixPattern.from_graph(t.graph, diagonal=True).to_sparse()
    cm = CuthillMcKee(start=t.root).fit(a)
    assert cm.start_ == t.root
    assert cm.bandwidth_ == B.layout_bandwidth(t.graph, B.cuthill_mckee(t.graph, t.root))
    out = cm.transform(a)
    assert B.pattern_bandwidth(B.MatrixPattern.from_sparse(out)) == cm.bandwidth_
    dense = cm.fit_transform(a.toarray())
    assert (dense == out.toarray()).all()
    rg = cm.transform(t.graph)
    assert B.layout_bandwidth(rg, B.LinearLayout.identity(t.n)) == cm.bandwidth_


def test_cuthill_mckee_params():
    cm = CuthillMcKee(reverse=True)
    assert cm.get_params() == {"start": None, "reverse": True}
    assert clone(cm).get_params() == cm.get_params()
    with pytest.raises(NotFittedError):
        cm.transform(np.eye(3))
    g = B.baseline("path", 6)
    fwd = CuthillMcKee(start=0).fit(g)
    rev = CuthillMcKee(start=0, reverse=True).fit(g)
    assert list(rev.permutation_) == list(fwd.permutation_[::-1])


def test_bfs_width_estimator():
    est = BFSWidth().fit(B.baseline("star", 8))
    assert (est.bfsw_, est.bfsw_root_, est.bfsw_min_) == (7, 0, 6)
    assert est.widths_.shape == (8,)


def test_reconstructor():
    g = B.level_tree(2, 3).graph
    est = DistanceOracleReconstructor(root=5).fit(g)
    assert B.build_graph(est.edges_, g.n) == g
    assert est.queries_used_ == (g.n - 1) + est.candidate_pairs_
