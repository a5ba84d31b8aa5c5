import io
from math import comb

import pytest

import bfswidth as B


def test_session_distances():
    s = B.open_session(B.baseline("path", 3))
    assert B.query(s, 0, 2) == 2
    star = B.open_session(B.baseline("star", 6))
    assert star.query(0, 4) == 1 and star.query(2, 5) == 2
    assert star.queries == 2


def test_query_counts_self_pairs():
    s = B.open_session(B.baseline("path", 5))
    assert s.query(3, 3) == 0
    assert s.query(1, 2) == 1
    assert s.query(0, 4) == 4
    assert s.queries == 3 == len(s.transcript)
    with pytest.raises(B.OutOfRange):
        s.query(0, 5)


def test_session_needs_connected():
    with pytest.raises(B.Disconnected):
        B.open_session(B.build_graph([(0, 1)], 3))


def test_reconstruct_path():
    n = 12
    g = B.baseline("path", n)
    res = B.reconstruct(B.open_session(g), 0)
    assert res.edges == frozenset(g.edges())
    assert res.queries_used == (n - 1) + (n - 2)


def test_reconstruct_star_center():
    n = 10
    g = B.baseline("star", n)
    res = B.reconstruct(B.open_session(g), 0)
    assert res.edges == frozenset(g.edges())
    assert res.queries_used == 9 + comb(9, 2) == 45
    width = n - 1
    assert res.queries_used <= (n - 1) + (n - 1) * (3 * width - 1) / 2


def test_reconstruct_level_tree():
    for j in range(2, 7):
        t = B.level_tree(2, j)
        res = B.reconstruct(B.open_session(t.graph), t.root)
        assert res.edges == frozenset(t.graph.edges())
        assert res.width == j + 2
        n = t.n
        assert res.queries_used <= (n - 1) + (n - 1) * (3 * (j + 2) - 1) / 2


def test_transcript_order_and_export():
    g = B.baseline("cycle", 5)
    s = B.open_session(g)
    res = B.reconstruct(s, 2)
    first = s.transcript[:4]
    assert [(u, v) for u, v, _ in first] == [(2, 0), (2, 1), (2, 3), (2, 4)]
    pairs = [(u, v) for u, v, _ in s.transcript[4:]]
    assert pairs == sorted(pairs) and all(u < v for u, v in pairs)
    assert len(pairs) == res.candidate_pairs
    out = io.StringIO()
    s.write_transcript(out)
    lines = out.getvalue().splitlines()
    assert len(lines) == s.queries and lines[0] == "2 0 2"


def test_reconstruct_bad_root():
    with pytest.raises(B.OutOfRange):
        B.reconstruct(B.open_session(B.baseline("path", 3)), 3)


def test_single_vertex():
    res = B.reconstruct(B.open_session(B.build_graph([], 1)), 0)
    assert res.edges == frozenset() and res.queries_used == 0
