"""Planar subdivision of a polygon by its windows into visibility regions."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import OnSubdivisionEdge, OutsidePolygon, WindowOutsidePolygon
from .geometry import (Location, Point, Segment, SimplePolygon, cross,
                       direction_key, locate, point_in_polygon,
                       segment_intersect, signed_area)
from .visibility import Side, _visible

__all__ = ["Carrier", "ArrangementEdge", "Region", "RegionDecomposition",
           "build_decomposition", "visibility_set", "face_at"]


@dataclass(frozen=True)
class Carrier:
    owner: int
    window: int
    # side of the edge (looking from segment.a to segment.b) that sees the owner
    side: Side


@dataclass
class ArrangementEdge:
    segment: Segment
    left_face: int | None
    right_face: int | None
    carriers: list = field(default_factory=list)

    @property
    def on_boundary(self) -> bool:
        return not self.carriers

    def face_on(self, side: Side):
        return self.left_face if side is Side.LEFT else self.right_face


@dataclass
class Region:
    id: int
    boundary: SimplePolygon
    representative: Point
    edges: list = field(default_factory=list)

    @property
    def area(self):
        return self.boundary.area


@dataclass
class RegionDecomposition:
    polygon: SimplePolygon
    windows: list
    faces: list
    edges: list
    # pairs of windows sharing at least one point
    window_crossings: int = 0

    @property
    def r(self) -> int:
        return len(self.faces)

    def interior_edges(self):
        return [e for e in self.edges if e.carriers]


def _bbox(seg):
    a, b = seg.a, seg.b
    return (float(min(a.x, b.x)), float(min(a.y, b.y)),
            float(max(a.x, b.x)), float(max(a.y, b.y)))


def _split_points(segments):
    """For every segment, the set of points where it must be cut."""
    cuts = [{s.a, s.b} for s, _ in segments]
    crossings = 0
    boxes = [_bbox(s) for s, _ in segments]
    order = sorted(range(len(segments)), key=lambda i: boxes[i][0])
    active = []
    for i in order:
        x0 = boxes[i][0]
        active = [j for j in active if boxes[j][2] >= x0]
        bi = boxes[i]
        si, ki = segments[i]
        for j in active:
            sj, kj = segments[j]
            if ki[0] == "edge" and kj[0] == "edge":
                continue
            bj = boxes[j]
            if bj[1] > bi[3] or bi[1] > bj[3]:
                continue
            hit = segment_intersect(si, sj)
            if hit is None:
                continue
            if ki[0] == "window" and kj[0] == "window":
                crossings += 1
            if isinstance(hit, Segment):
                cuts[i].update((hit.a, hit.b))
                cuts[j].update((hit.a, hit.b))
            else:
                cuts[i].add(hit)
                cuts[j].add(hit)
        active.append(i)
    return cuts, crossings


def build_decomposition(P: SimplePolygon, W: list) -> RegionDecomposition:
    """Cut P along every window and trace the faces of the result.

    Collinear overlapping windows end up on shared edges carrying one
    :class:`Carrier` per window.
    """
    for w in W:
        if not (point_in_polygon(P, w.segment.a) is not Location.EXTERIOR
                and point_in_polygon(P, w.segment.b) is not Location.EXTERIOR
                and _visible(P, w.segment.a, w.segment.b)):
            raise WindowOutsidePolygon(f"window {w.segment} leaves the polygon")

    segments = [(e, ("edge", k)) for k, e in enumerate(P.edges)]
    segments += [(w.segment, ("window", i)) for i, w in enumerate(W)]
    cuts, crossings = _split_points(segments)

    pieces = {}  # (lo, hi) -> carriers
    for (seg, (kind, idx)), pts in zip(segments, cuts):
        a = seg.a
        dx, dy = seg.b.x - a.x, seg.b.y - a.y
        ordered = sorted(pts, key=lambda p: (p.x - a.x) * dx + (p.y - a.y) * dy)
        for p, q in zip(ordered, ordered[1:]):
            key = (p, q) if p < q else (q, p)
            carriers = pieces.setdefault(key, [])
            if kind == "window":
                w = W[idx]
                side = w.visible_side if key[0] == p else Side(-w.visible_side)
                carriers.append(Carrier(w.owner, idx, side))

    # half-edge structure: outgoing neighbours of every node in CCW order
    nbrs = {}
    for a, b in pieces:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    rank = {}
    for u, lst in nbrs.items():
        lst.sort(key=lambda v: direction_key(v.x - u.x, v.y - u.y))
        rank[u] = {v: i for i, v in enumerate(lst)}

    def next_half(u, v):
        # face on the left: turn to the clockwise neighbour of the twin at v
        lst = nbrs[v]
        return v, lst[rank[v][u] - 1]

    face_of = {}
    cycles = []
    for a, b in sorted(pieces):
        for start in ((a, b), (b, a)):
            if start in face_of:
                continue
            cyc = []
            h = start
            while h not in face_of:
                face_of[h] = len(cycles)
                cyc.append(h)
                h = next_half(*h)
            cycles.append(cyc)

    bounded = []
    outer = []
    for ci, cyc in enumerate(cycles):
        area = signed_area([h[0] for h in cyc])
        (bounded if area > 0 else outer).append(ci)
    if len(outer) != 1:
        raise AssertionError(f"expected one outer cycle, found {len(outer)}")

    faces = []
    for ci in bounded:
        pts = _strip_collinear([h[0] for h in cycles[ci]])
        rep = Point(sum(p.x for p in pts) / len(pts), sum(p.y for p in pts) / len(pts))
        faces.append((rep, ci, pts))
    faces.sort(key=lambda f: (f[0].x, f[0].y))
    cycle_to_face = {ci: fid for fid, (_, ci, _) in enumerate(faces)}
    regions = [Region(fid, SimplePolygon(pts), rep) for fid, (rep, _, pts) in enumerate(faces)]

    edges = []
    for (a, b) in sorted(pieces):
        left = cycle_to_face.get(face_of[(a, b)])
        right = cycle_to_face.get(face_of[(b, a)])
        edge = ArrangementEdge(Segment(a, b), left, right, pieces[(a, b)])
        for fid in (left, right):
            if fid is not None:
                regions[fid].edges.append(len(edges))
        edges.append(edge)
    for reg in regions:
        if reg.area <= 0:
            raise AssertionError(f"face {reg.id} has non-positive area")
    return RegionDecomposition(P, list(W), regions, edges, crossings)


def _strip_collinear(pts):
    out = []
    n = len(pts)
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        if cross(a.x, a.y, b.x, b.y, c.x, c.y) != 0:
            out.append(b)
    return out


def visibility_set(P: SimplePolygon, region: Region) -> frozenset:
    """Indices of polygon vertices that see the region's representative."""
    rep = region.representative
    return frozenset(i for i, v in enumerate(P.vertices) if _visible(P, v, rep))


def face_at(decomp: RegionDecomposition, q: Point) -> int:
    if point_in_polygon(decomp.polygon, q) is not Location.INTERIOR:
        raise OutsidePolygon(f"{q} is not interior to the polygon")
    for reg in decomp.faces:
        loc = locate(reg.boundary.vertices, q)
        if loc is Location.INTERIOR:
            return reg.id
        if loc is Location.BOUNDARY:
            raise OnSubdivisionEdge(f"{q} lies on the boundary of face {reg.id}")
    raise AssertionError("faces do not cover the polygon")
