"""Distance-oracle sessions and reconstruction of low BFS width graphs.

A session hides a connected graph behind ``query(u, v)``, which answers the
hop distance and counts every call. ``reconstruct`` recovers the edge set
from one BFS layering: all distances from a root, then every pair of
non-root vertices whose layers differ by at most one. Adjacent vertices are
always in equal or neighbouring layers, so the distance-1 pairs among those
are exactly the edges.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TextIO

import numpy as np

from . import _kernels
from .exceptions import OutOfRange
from .graph import Graph, require_connected


class OracleSession:
    """Hidden graph plus query counter and transcript."""

    def __init__(self, hidden: Graph, record: bool = True):
        require_connected(hidden)
        if hidden.n < 1:
            raise OutOfRange("hidden graph must have at least one vertex")
        self.hidden = hidden
        self.n = hidden.n
        self._dist = _kernels.all_pairs_distances(hidden.indptr, hidden.indices)
        self._dist.flags.writeable = False
        self.queries = 0
        self.record = record
        self.transcript: list[tuple[int, int, int]] = []

    def _check(self, v):
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def query(self, u: int, v: int) -> int:
        u, v = int(u), int(v)
        self._check(u)
        self._check(v)
        d = int(self._dist[u, v])
        self.queries += 1
        if self.record:
            self.transcript.append((u, v, d))
        return d

    def query_many(self, us, vs) -> np.ndarray:
        """Vectorised ``query``; counts and records one query per pair."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if us.size and (min(us.min(), vs.min()) < 0 or max(us.max(), vs.max()) >= self.n):
            raise OutOfRange(f"query vertex outside 0..{self.n - 1}")
        d = self._dist[us, vs].astype(np.int64)
        self.queries += int(us.size)
        if self.record:
            self.transcript.extend(zip(us.tolist(), vs.tolist(), d.tolist()))
        return d

    def write_transcript(self, out: TextIO) -> None:
        for u, v, d in self.transcript:
            out.write(f"{u} {v} {d}\n")

    def __repr__(self):
        return f"OracleSession(n={self.n}, queries={self.queries})"


def open_session(hidden: Graph, record: bool = True) -> OracleSession:
    return OracleSession(hidden, record)


def query(session: OracleSession, u: int, v: int) -> int:
    return session.query(u, v)


@dataclass(frozen=True)
class ReconstructionResult:
    edges: frozenset
    queries_used: int
    root: int
    candidate_pairs: int
    width: int = field(default=0)

    def edge_array(self) -> np.ndarray:
        return np.array(sorted(self.edges), dtype=np.int64).reshape(-1, 2)


def _candidate_pairs(layer: np.ndarray, others: np.ndarray):
    """Pairs ``a < b`` of non-root vertices with layers at most one apart,
    in lexicographic order."""
    order = np.lexsort((others, layer))
    lay = layer[order]
    ids = others[order]
    starts = np.searchsorted(lay, lay - 1, side="left")
    ends = np.searchsorted(lay, lay + 1, side="right")
    counts = ends - starts
    a = np.repeat(ids, counts)
    idx = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts) \
        + np.repeat(starts, counts)
    b = ids[idx]
    keep = a < b
    a, b = a[keep], b[keep]
    lex = np.lexsort((b, a))
    return a[lex], b[lex]


def reconstruct(session: OracleSession, root: int = 0) -> ReconstructionResult:
    """Recover the hidden edge set with ``(n - 1) + |candidates|`` queries."""
    root = int(root)
    session._check(root)
    n = session.n
    before = session.queries
    others = np.array([u for u in range(n) if u != root], dtype=np.int64)
    layer = session.query_many(np.full(others.shape[0], root), others)
    a, b = _candidate_pairs(layer, others)
    d = session.query_many(a, b)
    edges = {(min(root, int(u)), max(root, int(u))) for u in others[layer == 1]}
    edges.update(zip(a[d == 1].tolist(), b[d == 1].tolist()))
    width = int(np.bincount(layer).max()) if n > 1 else 1
    return ReconstructionResult(frozenset(edges), session.queries - before, root,
                                int(a.shape[0]), max(width, 1))
