"""Command-line interface.

Exit status is 0 on success, 1 on bad input or usage, 2 when a search hit
its node limit (the output then holds the best result found).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import generators
from .arcdiagram import render_arc_diagram
from .exact import DEFAULT_NODE_LIMIT, exact_bandwidth
from .exceptions import GraphError
from .graph import LinearLayout, layout_bandwidth
from .io import read_graph, write_edge_list, write_matrix_market
from .layering import bfs_widths, bfsw_from, layer_order_layout
from .ordering import (MatrixPattern, cuthill_mckee, pseudo_peripheral_start,
                       reorder_pattern, reverse_cuthill_mckee)
from .reconstruction import open_session, reconstruct
from .report import analyze

EXIT_OK, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _read_order(path: str) -> LinearLayout:
    with open(path) as fh:
        tokens = [t for line in fh for t in line.split("#", 1)[0].split()]
    try:
        return LinearLayout.from_order([int(t) for t in tokens])
    except ValueError as exc:
        raise GraphError(f"{path}: {exc}") from None


def _write_graph(g, fmt: str, comment: str = "") -> str:
    if fmt == "mtx":
        text = write_matrix_market(MatrixPattern.from_graph(g))
        if comment:
            head, rest = text.split("\n", 1)
            text = f"{head}\n% {comment}\n{rest}"
        return text
    text = write_edge_list(g)
    return f"# {comment}\n{text}" if comment else text


def cmd_analyze(args):
    g = read_graph(args.graph, args.format)
    exact = {"auto": None, "always": True, "never": False}[args.exact]
    rep = analyze(g, graph_id=args.graph, start=args.start, exact=exact,
                  node_limit=args.node_limit)
    _emit(rep.to_json(), args.out)
    return EXIT_LIMIT if rep.exact_time_limit_hit else EXIT_OK


def cmd_bfsw(args):
    g = read_graph(args.graph, args.format)
    if args.root is not None:
        result = {"root": args.root, "bfsw_from": bfsw_from(g, args.root)}
    else:
        widths = bfs_widths(g)
        hi, lo = int(widths.argmax()), int(widths.argmin())
        result = {"bfsw": int(widths[hi]), "bfsw_root": hi,
                  "bfsw_min": int(widths[lo]), "bfsw_min_root": lo}
    _emit(_json(result), args.out)
    return EXIT_OK


def _cm(args, reverse: bool):
    # input format is sniffed; --format picks the output format
    g = read_graph(args.graph)
    start = pseudo_peripheral_start(g) if args.start is None else args.start
    layout = (reverse_cuthill_mckee if reverse else cuthill_mckee)(g, start)
    reordered = reorder_pattern(MatrixPattern.from_graph(g), layout).to_graph()
    order = " ".join(str(int(v)) for v in layout.order)
    comment = f"start {start} bandwidth {layout_bandwidth(g, layout)} order {order}"
    _emit(_write_graph(reordered, args.format or "edges", comment), args.out)
    return EXIT_OK


def cmd_exact(args):
    g = read_graph(args.graph, args.format)
    cert = exact_bandwidth(g, args.node_limit)
    _emit(_json({"optimum": cert.optimum, "order": cert.witness.order.tolist(),
                 "explored_nodes": cert.explored_nodes,
                 "time_limit_hit": cert.time_limit_hit}), args.out)
    return EXIT_LIMIT if cert.time_limit_hit else EXIT_OK


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise GraphError(f"{args.family} needs " + ", ".join("--" + m.replace("_", "-")
                                                             for m in missing))


def cmd_generate(args):
    fam = args.family
    layout = None
    if fam in ("level-tree", "mirrored-level-tree"):
        _need(args, "k", "j")
        build = generators.level_tree if fam == "level-tree" else generators.mirrored_level_tree
        t = build(args.k, args.j)
        g, layout = t.graph, t.canonical_layout
    elif fam == "caterpillar":
        _need(args, "delta", "spine_len")
        g = generators.caterpillar(args.delta, args.spine_len)
    elif fam == "star-subdivision":
        _need(args, "s")
        g, layout = generators.star_subdivision(args.s)
    elif fam == "random-banded":
        _need(args, "n", "b")
        g, layout = generators.random_banded(args.n, args.b, args.density, args.seed)
    else:
        _need(args, "n")
        g = generators.baseline(fam, args.n)
    _emit(_write_graph(g, args.format or "edges"), args.out)
    if args.layout_out:
        if layout is None:
            layout = LinearLayout.identity(g.n)
        with open(args.layout_out, "w") as fh:
            fh.write("\n".join(str(int(v)) for v in layout.order) + "\n")
    return EXIT_OK


def cmd_reconstruct(args):
    g = read_graph(args.graph, args.format)
    session = open_session(g, record=args.transcript is not None)
    res = reconstruct(session, args.root)
    edges = res.edge_array()
    n = g.n
    result = {
        "n": n, "m": int(edges.shape[0]), "root": res.root,
        "queries_used": res.queries_used, "candidate_pairs": res.candidate_pairs,
        "root_width": res.width,
        "query_bound": (n - 1) + (n - 1) * (3 * res.width - 1) / 2,
        "exact": res.edges == frozenset(g.edges()),
        "edges": edges.tolist(),
    }
    _emit(_json(result), args.out)
    if args.transcript:
        with open(args.transcript, "w") as fh:
            session.write_transcript(fh)
    return EXIT_OK


def cmd_arcdiagram(args):
    g = read_graph(args.graph, args.format)
    if args.layout:
        layout = _read_order(args.layout)
    elif args.order == "identity":
        layout = LinearLayout.identity(g.n)
    elif args.order == "layer":
        layout = layer_order_layout(g, 0 if args.root is None else args.root)
    else:
        fn = cuthill_mckee if args.order == "cm" else reverse_cuthill_mckee
        layout = fn(g, args.start)
    _emit(render_arc_diagram(g, layout, args.unit), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bfswidth", description="BFS width, bandwidth orderings and "
                                             "distance-oracle reconstruction.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, func, help, fmt_help="input format (sniffed when omitted)"):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph", help="edge list or Matrix Market file")
        sp.add_argument("--format", choices=["edges", "mtx"], help=fmt_help)
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("analyze", cmd_analyze, "full JSON report")
    sp.add_argument("--start", type=int)
    sp.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    sp.add_argument("--exact", choices=["auto", "always", "never"], default="auto",
                    help="run the exact oracle (auto: only when n <= 20)")

    sp = graph_cmd("bfsw", cmd_bfsw, "BFS width over all roots, or from --root")
    sp.add_argument("--root", type=int)

    for name, rev in (("cm", False), ("rcm", True)):
        sp = graph_cmd(name, lambda a, rev=rev: _cm(a, rev),
                       ("reverse " if rev else "") + "Cuthill-McKee reordering",
                       "output format of the reordered matrix (default edges)")
        sp.add_argument("--start", type=int)

    sp = graph_cmd("exact", cmd_exact, "exact minimum bandwidth")
    sp.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)

    sp = graph_cmd("reconstruct", cmd_reconstruct, "rebuild a graph from distance queries")
    sp.add_argument("--root", type=int, default=0)
    sp.add_argument("--transcript", help="write every query as 'u v d'")

    sp = graph_cmd("arcdiagram", cmd_arcdiagram, "SVG arc diagram of a layout")
    sp.add_argument("--layout", help="file listing vertices in layout order")
    sp.add_argument("--order", choices=["identity", "cm", "rcm", "layer"], default="identity")
    sp.add_argument("--start", type=int)
    sp.add_argument("--root", type=int)
    sp.add_argument("--unit", type=float, default=20.0)

    sp = sub.add_parser("generate", help="write a generated graph as an edge list")
    sp.add_argument("family", choices=["level-tree", "mirrored-level-tree", "caterpillar",
                                       "star-subdivision", "path", "star", "cycle",
                                       "complete", "random-banded"])
    sp.add_argument("-k", type=int)
    sp.add_argument("-j", type=int)
    sp.add_argument("-s", type=int)
    sp.add_argument("-n", type=int)
    sp.add_argument("-b", type=int)
    sp.add_argument("--delta", type=int)
    sp.add_argument("--spine-len", type=int)
    sp.add_argument("--density", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["edges", "mtx"])
    sp.add_argument("--out")
    sp.add_argument("--layout-out", help="also write the family's layout, one vertex per line")
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"bfswidth: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
