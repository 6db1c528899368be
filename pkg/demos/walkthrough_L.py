"""Step through the pipeline on the L-shaped room.

Run with ``python demos/walkthrough_L.py``.  Prints the windows, the five
visibility regions with the vertices that see them, the dual arcs, the two
sinks and the guards, then writes ``L_walkthrough.svg`` next to this file.
"""
from pathlib import Path

from artgallery import analyze, parse_poly, render_svg, solve_eg, solve_vg
from artgallery.arrangement import visibility_set
from artgallery.polyfile import format_number

L_POLY = """\
6
0 0
2 0
2 1
1 1
1 2
0 2
"""


def fmt(p):
    return f"({format_number(p.x)}, {format_number(p.y)})"


def main():
    P = parse_poly(L_POLY)
    A = analyze(P)
    print(f"polygon with {P.n} vertices, area {P.area}; vertex 3 {fmt(P.vertices[3])} is reflex")

    print(f"\n{len(A.windows)} windows")
    for w in A.windows:
        print(f"  seen from v{w.owner}: {fmt(w.segment.a)} -> {fmt(w.segment.b)}")

    d = A.decomposition
    print(f"\n{d.r} regions")
    for f in d.faces:
        seen = sorted(visibility_set(P, f))
        mark = "  <- sink" if f.id in A.sinks else ""
        print(f"  region {f.id} at {fmt(f.representative)}: seen by vertices {seen}{mark}")

    print("\ndual arcs (each points at the region seen by fewer vertices)")
    for src, dst in sorted({(a.src, a.dst) for a in A.dual.arcs}):
        print(f"  {src} -> {dst}")

    vg, eg = solve_vg(P, A), solve_eg(P, A)
    print(f"\nvertex guards {vg.guards}, edge guards {eg.guards} "
          f"(covering {A.sinks.m} sinks instead of {d.r} regions)")

    out = Path(__file__).with_name("L_walkthrough.svg")
    out.write_text(render_svg(d, A.dual, A.sinks, vg, labels=True), encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
