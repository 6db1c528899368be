"""SVG 1.1 drawings of a decomposition, its dual orientation and a solution.

The output is a pure function of its inputs: elements are emitted in face,
edge and arc order and every coordinate is printed with three decimals, so
files can be compared byte for byte.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

from .arrangement import RegionDecomposition
from .sinkgraph import DualGraph, SinkSet

__all__ = ["render_svg"]

SIZE = 600
PAD = 20

STYLE = """\
.face { fill: #ffffff; stroke: none; }
.sink { fill: #f6d7a7; }
.window { stroke: #7a8ca5; stroke-width: 1; stroke-dasharray: 4 3; fill: none; }
.outline { stroke: #222222; stroke-width: 2; fill: none; }
.arc { stroke: #b03a2e; stroke-width: 1.2; fill: none; marker-end: url(#head); }
.guard { fill: #1f6f43; stroke: #1f6f43; }
.guard-edge { stroke: #1f6f43; stroke-width: 5; stroke-linecap: round; }
.label { font: 10px sans-serif; fill: #555555; }"""


class _Frame:
    def __init__(self, pts):
        xs = [float(p.x) for p in pts]
        ys = [float(p.y) for p in pts]
        self.x0, self.y1 = min(xs), max(ys)
        span = max(max(xs) - self.x0, self.y1 - min(ys)) or 1.0
        self.s = (SIZE - 2 * PAD) / span
        self.w = (max(xs) - self.x0) * self.s + 2 * PAD
        self.h = (self.y1 - min(ys)) * self.s + 2 * PAD

    def __call__(self, p):
        return (f"{(float(p.x) - self.x0) * self.s + PAD:.3f}",
                f"{(self.y1 - float(p.y)) * self.s + PAD:.3f}")

    def points(self, pts):
        return " ".join(",".join(self(p)) for p in pts)


def _shorten(a, b, frac=0.15):
    ax, ay, bx, by = float(a.x), float(a.y), float(b.x), float(b.y)
    dx, dy = bx - ax, by - ay
    return (type(a)(ax + frac * dx, ay + frac * dy),
            type(a)(bx - frac * dx, by - frac * dy))


def render_svg(decomp: RegionDecomposition, dual: DualGraph, sinks: SinkSet,
               solution=None, labels: bool = False) -> str:
    """Polygon outline, regions (sinks shaded), windows, one arrow per
    directed pair of adjacent regions, and the guards of ``solution``."""
    P = decomp.polygon
    f = _Frame(P.vertices)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{f.w:.0f}" height="{f.h:.0f}" viewBox="0 0 {f.w:.0f} {f.h:.0f}">',
        f"<style>\n{STYLE}\n</style>",
        '<defs><marker id="head" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto">'
        '<path d="M0,0 L10,5 L0,10 z" fill="#b03a2e"/></marker></defs>',
        '<g id="faces">',
    ]
    for face in decomp.faces:
        cls = "face sink" if face.id in sinks else "face"
        out.append(f'<polygon class="{cls}" data-face="{face.id}" '
                   f'points="{f.points(face.boundary.vertices)}"/>')
    out.append("</g>")

    out.append('<g id="windows">')
    for e in decomp.interior_edges():
        (x1, y1), (x2, y2) = f(e.segment.a), f(e.segment.b)
        out.append(f'<line class="window" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")

    out.append(f'<polygon class="outline" points="{f.points(P.vertices)}"/>')

    out.append('<g id="arcs">')
    pairs = sorted({(a.src, a.dst) for a in dual.arcs})
    for src, dst in pairs:
        a, b = _shorten(decomp.faces[src].representative, decomp.faces[dst].representative)
        (x1, y1), (x2, y2) = f(a), f(b)
        out.append(f'<line class="arc" data-src="{src}" data-dst="{dst}" '
                   f'x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")

    if labels:
        out.append('<g id="labels">')
        for face in decomp.faces:
            x, y = f(face.representative)
            out.append(f'<text class="label" x="{x}" y="{y}">{face.id}</text>')
        for i, v in enumerate(P.vertices):
            x, y = f(v)
            out.append(f'<text class="label" x="{x}" y="{y}">v{i}</text>')
        out.append("</g>")

    if solution is not None:
        kind = getattr(solution.kind, "value", solution.kind)
        out.append(f'<g id="guards" data-kind="{escape(str(kind))}">')
        for g in solution.guards:
            if kind == "eg":
                e = P.edges[g]
                (x1, y1), (x2, y2) = f(e.a), f(e.b)
                out.append(f'<line class="guard-edge" data-guard="{g}" '
                           f'x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
            else:
                x, y = f(P.vertices[g])
                out.append(f'<circle class="guard" data-guard="{g}" cx="{x}" cy="{y}" r="5"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
