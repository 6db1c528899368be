import re
import xml.etree.ElementTree as ET

import pytest

from artgallery.oracle import regular_convex
from artgallery.pipeline import analyze, solve_eg, solve_vg
from artgallery.render import render_svg

NS = {"s": "http://www.w3.org/2000/svg"}


def _svg(P, kind=None, labels=False):
    A = analyze(P)
    sol = {"vg": solve_vg, "eg": solve_eg}[kind](P, A) if kind else None
    return render_svg(A.decomposition, A.dual, A.sinks, sol, labels)


def _find(text, group, tag):
    root = ET.fromstring(text.encode())
    g = root.find(f"s:g[@id='{group}']", NS)
    return [] if g is None else g.findall(f"s:{tag}", NS)


def test_convex_single_face_no_arrows():
    text = _svg(regular_convex(8))
    assert len(_find(text, "faces", "polygon")) == 1
    assert _find(text, "arcs", "line") == []
    assert _find(text, "windows", "line") == []


def test_L_drawing(L, L_faces):
    text = _svg(L, "vg")
    faces = _find(text, "faces", "polygon")
    assert len(faces) == 5
    shaded = {int(f.get("data-face")) for f in faces if "sink" in f.get("class").split()}
    assert shaded == {L_faces["A"], L_faces["E"]}
    assert len(_find(text, "arcs", "line")) == 4
    assert len(_find(text, "windows", "line")) > 0
    dots = _find(text, "guards", "circle")
    assert [d.get("data-guard") for d in dots] == ["0"]
    # (0,0) is the bottom-left corner of the frame
    assert (dots[0].get("cx"), dots[0].get("cy")) == ("20.000", "580.000")


def test_comb3_three_guard_dots(comb3):
    assert len(_find(_svg(comb3, "vg"), "guards", "circle")) == 3


def test_edge_guards_drawn_as_segments(comb3):
    text = _svg(comb3, "eg")
    assert len(_find(text, "guards", "line")) == 3
    assert _find(text, "guards", "circle") == []


def test_labels(L):
    text = _svg(L, labels=True)
    labels = [t.text for t in _find(text, "labels", "text")]
    assert labels == [str(i) for i in range(5)] + [f"v{i}" for i in range(6)]


@pytest.mark.parametrize("name", ["L", "comb3"])
def test_golden(name, data_dir):
    from artgallery.polyfile import read_poly
    P = read_poly(data_dir / f"{name}.poly")
    assert _svg(P, "vg") == (data_dir / f"{name}.svg").read_text(encoding="utf-8")


def test_fixed_precision(L):
    nums = re.findall(r'(?:x1|y1|x2|y2|cx|cy)="([^"]+)"', _svg(L, "vg"))
    assert nums and all(re.fullmatch(r"-?\d+\.\d{3}", v) for v in nums)
