import numpy as np
import pytest
from gmpy2 import mpq
from hypothesis import given

from artgallery.arrangement import build_decomposition, face_at, visibility_set
from artgallery.errors import OnSubdivisionEdge, OutsidePolygon, WindowOutsidePolygon
from artgallery.geometry import Location, Segment, cross, locate
from artgallery.oracle import regular_convex, segment_in_polygon
from artgallery.suite import face_samples
from artgallery.visibility import Side, Window, all_windows

from conftest import poly, pt
from strategies import polygons, seeds


def _tri(*c):
    return {pt(*p) for p in c}


def test_convex_single_face():
    P = regular_convex(7)
    d = build_decomposition(P, [])
    assert d.r == 1
    assert d.faces[0].area == P.area
    assert face_at(d, pt(0, 0)) == 0


def test_L_five_faces(L, L_analysis, L_faces):
    d = L_analysis.decomposition
    assert d.r == 5
    want = {
        "A": _tri((1, 1), (2, 1), (2, 0)),
        "B": _tri((1, 1), (2, 0), (1, 0)),
        "C": _tri((0, 0), (1, 0), (1, 1), (0, 1)),
        "D": _tri((0, 1), (1, 1), (0, 2)),
        "E": _tri((1, 1), (0, 2), (1, 2)),
    }
    for name, fid in L_faces.items():
        assert set(d.faces[fid].boundary.vertices) == want[name]
    assert sum(f.area for f in d.faces) == 3


def test_L_face_at(L_analysis, L_faces):
    d = L_analysis.decomposition
    assert face_at(d, pt("1/2", "1/2")) == L_faces["C"]
    assert face_at(d, pt("7/4", "3/4")) == L_faces["A"]
    with pytest.raises(OnSubdivisionEdge):
        face_at(d, pt("1/2", 1))
    with pytest.raises(OutsidePolygon):
        face_at(d, pt("3/2", "3/2"))
    with pytest.raises(OutsidePolygon):
        face_at(d, pt(0, 1))  # on the polygon boundary


def test_L_visibility_sets(L, L_analysis, L_faces):
    d = L_analysis.decomposition
    vs = {k: visibility_set(L, d.faces[f]) for k, f in L_faces.items()}
    assert vs["C"] == frozenset(range(6))
    assert vs["A"] == frozenset({0, 1, 2, 3})
    assert vs["E"] == frozenset({0, 3, 4, 5})


def test_square_with_diagonal_window(unit_square):
    w = Window(Segment(pt(0, 0), pt(1, 1)), 1, Side.RIGHT)
    d = build_decomposition(unit_square, [w])
    assert d.r == 2
    assert all(len(f.boundary.vertices) == 3 for f in d.faces)
    (inner,) = d.interior_edges()
    assert len(inner.carriers) == 1


def test_window_outside_rejected(L):
    w = Window(Segment(pt(2, 1), pt(1, 2)), 2, Side.LEFT)
    with pytest.raises(WindowOutsidePolygon):
        build_decomposition(L, [w])


def test_collinear_windows_share_an_edge():
    # (3,0) and (3,5) both look up past the reflex vertex (3,6)
    P = poly((4, 6), (4, 5), (5, 7), (1, 7), (3, 0), (7, 2), (3, 5), (3, 6))
    d = build_decomposition(P, all_windows(P))
    shared = [e for e in d.edges if len(e.carriers) > 1]
    assert shared, "expected merged collinear windows"
    for e in shared:
        owners = [c.owner for c in e.carriers]
        assert len(set(owners)) == len(owners)
        assert len({c.side for c in e.carriers}) == 1
    assert any(e.segment == Segment(pt(3, 6), pt(3, 7)) for e in shared)


@given(polygons)
def test_area_conservation(P):
    d = build_decomposition(P, all_windows(P))
    assert sum((f.area for f in d.faces), mpq(0)) == P.area
    assert (d.r == 1) == (not d.windows)


@given(polygons)
def test_faces_convex_and_representative_inside(P):
    d = build_decomposition(P, all_windows(P))
    for f in d.faces:
        V = f.boundary.vertices
        n = len(V)
        for i in range(n):
            a, b, c = V[i - 1], V[i], V[(i + 1) % n]
            assert cross(a.x, a.y, b.x, b.y, c.x, c.y) >= 0
        assert locate(V, f.representative) is Location.INTERIOR
        assert face_at(d, f.representative) == f.id


@given(polygons)
def test_edge_carriers_and_neighbours(P):
    d = build_decomposition(P, all_windows(P))
    vis = [visibility_set(P, f) for f in d.faces]
    for e in d.edges:
        assert bool(e.carriers) == (e.left_face is not None and e.right_face is not None)
        if not e.carriers:
            continue
        assert vis[e.left_face] != vis[e.right_face]
        for c in e.carriers:
            seeing = e.face_on(c.side)
            other = e.right_face if seeing == e.left_face else e.left_face
            assert c.owner in vis[seeing] and c.owner not in vis[other]
        if len(e.carriers) == 1:
            assert len(vis[e.left_face] ^ vis[e.right_face]) == 1


@given(polygons, seeds)
def test_region_constancy(P, seed):
    """Sampled interior points of a face see exactly the face's vertex set."""
    d = build_decomposition(P, all_windows(P))
    rng = np.random.default_rng(seed)
    for f in d.faces[:12]:
        want = visibility_set(P, f)
        for p in face_samples(f, 4, rng):
            got = frozenset(i for i, v in enumerate(P.vertices) if segment_in_polygon(P, v, p))
            assert got == want
