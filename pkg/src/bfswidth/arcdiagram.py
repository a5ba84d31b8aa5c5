"""SVG arc diagrams of linear layouts.

Vertices sit on a horizontal baseline in layout order. An edge between
consecutive positions is a straight segment; any longer edge is a
semicircle above the baseline whose diameter is its length. The tallest arc
therefore rises half the layout bandwidth, which fixes the drawing height.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exceptions import InvalidParams
from .graph import Graph, LinearLayout, _check_layout, layout_bandwidth

MARGIN = 10.0
RADIUS = 2.0


@dataclass(frozen=True)
class ArcDiagram:
    layout: LinearLayout
    unit: float
    bandwidth: int

    @property
    def height(self) -> float:
        """Tallest arc, in position units."""
        return self.bandwidth / 2

    @property
    def width_px(self) -> float:
        return max(self.layout.n - 1, 0) * self.unit + 2 * MARGIN

    @property
    def height_px(self) -> float:
        return self.height * self.unit + 2 * MARGIN


def _num(x: float) -> str:
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def render_arc_diagram(g: Graph, layout: LinearLayout, unit: float = 20.0) -> str:
    if not unit > 0:
        raise InvalidParams(f"unit must be positive, got {unit}")
    layout = _check_layout(g, layout)
    diagram = ArcDiagram(layout, float(unit), layout_bandwidth(g, layout))
    base = MARGIN + diagram.height * unit
    pos = layout.position

    def x(v):
        return MARGIN + int(pos[v]) * unit

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(diagram.width_px)}" height="{_num(diagram.height_px)}" '
        f'viewBox="0 0 {_num(diagram.width_px)} {_num(diagram.height_px)}">',
        '<g fill="none" stroke="black" stroke-width="1">',
    ]
    edges = sorted(g.edges(), key=lambda e: (min(pos[e[0]], pos[e[1]]), max(pos[e[0]], pos[e[1]])))
    for u, v in edges:
        x1, x2 = sorted((x(u), x(v)))
        if x2 - x1 == unit:
            out.append(f'<line x1="{_num(x1)}" y1="{_num(base)}" x2="{_num(x2)}" y2="{_num(base)}"/>')
        else:
            r = (x2 - x1) / 2
            out.append(f'<path d="M {_num(x1)} {_num(base)} A {_num(r)} {_num(r)} 0 0 1 '
                       f'{_num(x2)} {_num(base)}"/>')
    out.append('</g>')
    out.append('<g fill="black">')
    for p, v in enumerate(layout.order):
        out.append(f'<circle cx="{_num(MARGIN + p * unit)}" cy="{_num(base)}" r="{_num(RADIUS)}">'
                   f'<title>{int(v)}</title></circle>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
