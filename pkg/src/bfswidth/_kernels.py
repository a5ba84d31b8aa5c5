"""Compiled BFS kernels over CSR adjacency (``indptr``, ``indices``).

All kernels assume a simple undirected graph stored symmetrically. Distances
are ``int32`` with ``-1`` marking unreachable vertices.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def bfs_distances(indptr, indices, root):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, np.int32)
    queue = np.empty(n, np.int32)
    dist[root] = 0
    queue[0] = root
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        dv = dist[v] + 1
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if dist[u] < 0:
                dist[u] = dv
                queue[tail] = u
                tail += 1
    return dist


@njit(cache=True)
def bfs_order(indptr, indices, root):
    """Visit order of a FIFO BFS; neighbours are scanned in CSR order.

    Returns the order truncated to the reachable vertices.
    """
    n = indptr.shape[0] - 1
    seen = np.zeros(n, np.bool_)
    queue = np.empty(n, np.int64)
    seen[root] = True
    queue[0] = root
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if not seen[u]:
                seen[u] = True
                queue[tail] = u
                tail += 1
    return queue[:tail]


@njit(cache=True)
def all_pairs_distances(indptr, indices):
    n = indptr.shape[0] - 1
    out = np.empty((n, n), np.int32)
    for r in range(n):
        out[r, :] = bfs_distances(indptr, indices, r)
    return out


@njit(cache=True)
def all_widths_brute(indptr, indices):
    """Per-root BFS width by one full BFS per root. Graph must be connected."""
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, np.int32)
    queue = np.empty(n, np.int32)
    widths = np.empty(n, np.int32)
    for r in range(n):
        dist[r] = 0
        queue[0] = r
        head = 0
        tail = 1
        width = 0
        while head < tail:
            layer_end = tail
            if layer_end - head > width:
                width = layer_end - head
            while head < layer_end:
                v = queue[head]
                head += 1
                dv = dist[v] + 1
                for k in range(indptr[v], indptr[v + 1]):
                    u = indices[k]
                    if dist[u] < 0:
                        dist[u] = dv
                        queue[tail] = u
                        tail += 1
        widths[r] = width
        for i in range(tail):
            dist[queue[i]] = -1
    return widths


@njit(cache=True)
def max_local_density(indptr, indices):
    """max over (v, d) of ceil(|N(v, d)| / 2d), one BFS per vertex."""
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, np.int32)
    queue = np.empty(n, np.int32)
    best = 0
    for r in range(n):
        dist[r] = 0
        queue[0] = r
        head = 0
        tail = 1
        d = 0
        while head < tail:
            layer_end = tail
            while head < layer_end:
                v = queue[head]
                head += 1
                dv = dist[v] + 1
                for k in range(indptr[v], indptr[v + 1]):
                    u = indices[k]
                    if dist[u] < 0:
                        dist[u] = dv
                        queue[tail] = u
                        tail += 1
            d += 1
            reached = tail - 1
            if tail > layer_end:
                bound = (reached + 2 * d - 1) // (2 * d)
                if bound > best:
                    best = bound
        for i in range(tail):
            dist[queue[i]] = -1
    return best


@njit(cache=True)
def _layer_counts(dist):
    counts = np.zeros(dist.max() + 1, np.int32)
    for x in range(dist.shape[0]):
        counts[dist[x]] += 1
    return counts


@njit(cache=True)
def _suffix_max(a):
    out = np.empty(a.shape[0] + 1, a.dtype)
    out[a.shape[0]] = 0
    for i in range(a.shape[0] - 1, -1, -1):
        out[i] = max(a[i], out[i + 1])
    return out


@njit(cache=True)
def all_widths_banded(indptr, indices, b, d0, dn):
    """Exact per-root BFS width for a connected graph whose identity layout
    has bandwidth at most ``b``.

    ``d0`` and ``dn`` are BFS distances from vertex 0 and vertex n - 1.
    Any ``b`` consecutive vertices form a separator. Once a root's distances on
    the window at either edge of its explored interval equal the reference
    distances plus a constant, every vertex beyond that window is at reference
    distance plus the same constant, so the tail layer counts come from the
    reference layer counts and the BFS can stop early.
    """
    n = indptr.shape[0] - 1
    A = _layer_counts(d0)
    B = _layer_counts(dn)
    len_a = A.shape[0]
    len_b = B.shape[0]
    suf_a = _suffix_max(A)
    suf_b = _suffix_max(B)
    pmax0 = np.empty(n, np.int32)
    smin0 = np.empty(n, np.int32)
    smaxn = np.empty(n, np.int32)
    pminn = np.empty(n, np.int32)
    pmax0[0] = d0[0]
    pminn[0] = dn[0]
    for x in range(1, n):
        pmax0[x] = max(pmax0[x - 1], d0[x])
        pminn[x] = min(pminn[x - 1], dn[x])
    smin0[n - 1] = d0[n - 1]
    smaxn[n - 1] = dn[n - 1]
    for x in range(n - 2, -1, -1):
        smin0[x] = min(smin0[x + 1], d0[x])
        smaxn[x] = max(smaxn[x + 1], dn[x])

    dist = np.full(n, -1, np.int32)
    queue = np.empty(n, np.int32)
    hist = np.zeros(2 * n + 2, np.int32)
    widths = np.empty(n, np.int32)
    for r in range(n):
        dist[r] = 0
        queue[0] = r
        head = 0
        tail = 1
        lo = r
        hi = r
        while True:
            layer_end = tail
            while head < layer_end:
                v = queue[head]
                head += 1
                dv = dist[v] + 1
                for k in range(indptr[v], indptr[v + 1]):
                    u = indices[k]
                    if dist[u] < 0:
                        dist[u] = dv
                        queue[tail] = u
                        tail += 1
            while hi + 1 < n and dist[hi + 1] >= 0:
                hi += 1
            while lo > 0 and dist[lo - 1] >= 0:
                lo -= 1
            if head == tail:
                break
            if hi - lo + 1 < b:
                continue
            right_ok = hi == n - 1
            if not right_ok:
                c = dist[hi] - d0[hi]
                right_ok = True
                for w in range(hi - b + 1, hi):
                    if dist[w] - d0[w] != c:
                        right_ok = False
                        break
            if not right_ok:
                continue
            left_ok = lo == 0
            if not left_ok:
                c = dist[lo] - dn[lo]
                left_ok = True
                for w in range(lo + 1, lo + b):
                    if dist[w] - dn[w] != c:
                        left_ok = False
                        break
            if left_ok:
                break

        # explicit counts below i_lo, closed-form tails above it
        i_lo = 0
        for x in range(lo, hi + 1):
            dx = dist[x]
            hist[dx] += 1
            if dx + 1 > i_lo:
                i_lo = dx + 1
        has_r = hi < n - 1
        has_l = lo > 0
        c_r = 0
        c_l = 0
        mp = 0
        mq = 0
        if has_r:
            c_r = dist[hi] - d0[hi]
            mp = pmax0[hi]
            if mp + 1 + c_r > i_lo:
                i_lo = mp + 1 + c_r
        if has_l:
            c_l = dist[lo] - dn[lo]
            mq = smaxn[lo]
            if mq + 1 + c_l > i_lo:
                i_lo = mq + 1 + c_l
        if has_r:
            x = hi + 1
            while x < n and smin0[x] <= mp:
                if d0[x] <= mp:
                    hist[d0[x] + c_r] += 1
                x += 1
            for k in range(mp + 1, min(i_lo - c_r, len_a)):
                hist[k + c_r] += A[k]
        if has_l:
            x = lo - 1
            while x >= 0 and pminn[x] <= mq:
                if dn[x] <= mq:
                    hist[dn[x] + c_l] += 1
                x -= 1
            for k in range(mq + 1, min(i_lo - c_l, len_b)):
                hist[k + c_l] += B[k]
        width = 0
        for i in range(i_lo):
            if hist[i] > width:
                width = hist[i]
            hist[i] = 0

        if has_r and has_l:
            end_a = len_a + c_r
            end_b = len_b + c_l
            both_end = min(end_a, end_b)
            for i in range(i_lo, both_end):
                s = A[i - c_r] + B[i - c_l]
                if s > width:
                    width = s
            start = max(i_lo, both_end)
            if start < end_a and suf_a[start - c_r] > width:
                width = suf_a[start - c_r]
            if start < end_b and suf_b[start - c_l] > width:
                width = suf_b[start - c_l]
        elif has_r:
            if i_lo - c_r < len_a and suf_a[i_lo - c_r] > width:
                width = suf_a[i_lo - c_r]
        elif has_l:
            if i_lo - c_l < len_b and suf_b[i_lo - c_l] > width:
                width = suf_b[i_lo - c_l]
        widths[r] = width
        for i in range(tail):
            dist[queue[i]] = -1
    return widths
