"""Edge-list and Matrix Market (coordinate pattern symmetric) text formats.

Edge lists hold one ``u v`` pair per line with 0-based ids. An optional
first data line ``n m`` fixes the vertex count; it is taken as a header
when ``n >= 1``, ``m`` equals the number of lines that follow and every id
after it is below ``n``. ``#`` starts a comment. Matrix Market files
are 1-based and store the lower triangle.
"""
from __future__ import annotations

import numpy as np

from .exceptions import DimensionError, FormatError, OutOfRange, UnsupportedFormat
from .graph import Graph, build_graph
from .ordering import MatrixPattern

MM_HEADER = "%%MatrixMarket matrix coordinate pattern symmetric"


def _data_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(no, line, count):
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} integers, got {line!r}", no)
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"not an integer in {line!r}", no) from None
    if min(vals) < 0:
        raise FormatError(f"negative value in {line!r}", no)
    return vals


def read_edge_list(text: str) -> Graph:
    rows = [(no, _ints(no, line, 2)) for no, line in _data_lines(text)]
    n = None
    if rows and rows[0][1][1] == len(rows) - 1 and _is_header(rows):
        n = rows[0][1][0]
        rows = rows[1:]
    edges = [pair for _, pair in rows]
    if n is None:
        n = 1 + max((max(p) for p in edges), default=-1)
    return build_graph(edges, n)


def _is_header(rows) -> bool:
    # "n m" is a header only if n >= 1 and every following id fits below n
    n = rows[0][1][0]
    return n >= 1 and all(max(pair) < n for _, pair in rows[1:])


def write_edge_list(g: Graph, header: bool = True) -> str:
    lines = [f"{g.n} {g.m}"] if header else []
    lines.extend(f"{u} {v}" for u, v in g.edge_array())
    return "\n".join(lines) + "\n"


def read_matrix_market(text: str) -> MatrixPattern:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty file", 1)
    banner = lines[0].split()
    if len(banner) != 5 or banner[0].lower() != "%%matrixmarket":
        raise FormatError("missing %%MatrixMarket banner", 1)
    kind = [w.lower() for w in banner[1:]]
    if kind != ["matrix", "coordinate", "pattern", "symmetric"]:
        raise UnsupportedFormat(f"only coordinate pattern symmetric matrices, got {' '.join(kind)}")
    data = [(no, line.strip()) for no, line in enumerate(lines[1:], 2)
            if line.strip() and not line.lstrip().startswith("%")]
    if not data:
        raise FormatError("missing size line", len(lines))
    no, size = data[0]
    rows, cols, nnz = _ints(no, size, 3)
    if rows != cols:
        raise DimensionError(f"matrix is {rows}x{cols}, not square")
    if len(data) - 1 != nnz:
        raise FormatError(f"size line announces {nnz} entries, found {len(data) - 1}", no)
    entries = np.empty((nnz, 2), dtype=np.int64)
    for k, (no, line) in enumerate(data[1:]):
        i, j = _ints(no, line, 2)
        if not (1 <= i <= rows and 1 <= j <= rows):
            raise OutOfRange(f"line {no}: entry ({i}, {j}) outside a {rows}x{rows} matrix")
        entries[k] = (i - 1, j - 1)
    return MatrixPattern(rows, entries)


def write_matrix_market(p: MatrixPattern) -> str:
    """Canonical form: lower-triangle entries ``i >= j`` sorted by ``(i, j)``."""
    e = p.entries
    lower = np.stack([e[:, 1], e[:, 0]], axis=1)
    lower = lower[np.lexsort((lower[:, 1], lower[:, 0]))]
    out = [MM_HEADER, f"{p.n} {p.n} {len(lower)}"]
    out.extend(f"{i + 1} {j + 1}" for i, j in lower)
    return "\n".join(out) + "\n"


def read_graph(path: str, fmt: str | None = None) -> Graph:
    """Load a graph from an edge list or a Matrix Market pattern file."""
    with open(path) as fh:
        text = fh.read()
    if fmt is None:
        fmt = "mtx" if text.lstrip().lower().startswith("%%matrixmarket") else "edges"
    if fmt == "mtx":
        return read_matrix_market(text).to_graph()
    if fmt == "edges":
        return read_edge_list(text)
    raise UnsupportedFormat(f"unknown format {fmt!r}")
