"""Visibility polygons, the closed visibility predicate and window extraction.

Visibility here is closed: a segment may graze reflex vertices or run along
edges as long as it never enters the exterior of the polygon.

The visibility polygon is built by an angular sweep around the viewpoint.
Every vertex direction is a *critical ray*; between two consecutive critical
rays the first edge hit does not change, so each open sector contributes a
piece of one polygon edge.  Along each critical ray an exact walk over the
boundary events gives how far the closed ray stays inside the polygon, and
the two sector limits on that ray tell which part of it is a window.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import PointOutsidePolygon
from .geometry import (Location, Point, Segment, SimplePolygon, cross,
                       direction_key, line_intersection, locate, on_segment,
                       point_in_polygon)

__all__ = [
    "EdgeTag", "Side", "Window", "VisibilityPolygon", "visible",
    "visibility_polygon", "windows_of_vertex", "all_windows",
]

# status of a ray just past a point
INSIDE, ALONG, OUTSIDE = 0, 1, 2


class EdgeTag(enum.Enum):
    ON_POLYGON_BOUNDARY = "boundary"
    WINDOW = "window"
    # zero-width visible sliver: both sides of it are hidden from the viewpoint
    SPIKE = "spike"


class Side(enum.IntEnum):
    """Which side of a window, looking from base to end, sees the owner."""
    RIGHT = -1
    LEFT = 1


@dataclass(frozen=True)
class Window:
    segment: Segment
    owner: int
    visible_side: Side

    @property
    def base(self) -> Point:
        return self.segment.a

    @property
    def end(self) -> Point:
        return self.segment.b


@dataclass
class VisibilityPolygon:
    viewpoint: Point
    vertices: tuple
    boundary_tags: tuple
    windows: list = field(default_factory=list)
    visible_vertices: frozenset = frozenset()
    # edges of P sharing at least one point with the closed polygon
    touched_edges: frozenset = frozenset()

    @property
    def region(self) -> SimplePolygon:
        # weakly simple when spikes are present
        return SimplePolygon(self.vertices)

    @property
    def edges(self):
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)], self.boundary_tags[i])
                for i in range(len(v))]

    def contains(self, p: Point) -> bool:
        """Closed membership; boundary points (and spikes) count."""
        return locate(self.vertices, p) is not Location.EXTERIOR

    @property
    def area(self):
        from .geometry import signed_area
        return signed_area(self.vertices)


def _boundary_feature(P: SimplePolygon, q: Point):
    """('v', i) if q is vertex i, ('e', k) if q is inside edge k, else None."""
    i = P.vertex_index(q)
    if i is not None:
        return ("v", i)
    for k, e in enumerate(P.edges):
        if on_segment(q, e.a, e.b):
            return ("e", k)
    return None


def _status_at(P: SimplePolygon, feature, dx, dy) -> int:
    """Status of the ray leaving a boundary point in direction d."""
    kind, idx = feature
    if kind == "e":
        e = P.edges[idx]
        c = (e.b.x - e.a.x) * dy - (e.b.y - e.a.y) * dx
        if c > 0:
            return INSIDE
        return ALONG if c == 0 else OUTSIDE
    V, n = P.vertices, P.n
    v = V[idx]
    nxt, prv = V[(idx + 1) % n], V[idx - 1]
    ax, ay = nxt.x - v.x, nxt.y - v.y
    bx, by = prv.x - v.x, prv.y - v.y
    c_ad = ax * dy - ay * dx
    c_bd = bx * dy - by * dx
    if (c_ad == 0 and ax * dx + ay * dy > 0) or (c_bd == 0 and bx * dx + by * dy > 0):
        return ALONG
    c_ab = ax * by - ay * bx
    if c_ab > 0:
        inside = c_ad > 0 and c_bd < 0
    elif c_ab < 0:
        inside = not (c_bd >= 0 and c_ad <= 0)
    else:
        inside = c_ad > 0
    return INSIDE if inside else OUTSIDE


def _ray_events(P: SimplePolygon, q: Point, dx, dy, tmax=None):
    """Boundary points on the ray q + t*d with t > 0, sorted by t.

    Returns a list of ``(t, point, feature, status_after)``.  With ``tmax``
    only events with t < tmax are kept.
    """
    found = {}
    V = P.vertices
    n = P.n
    qx, qy = q.x, q.y
    for k in range(n):
        a = V[k]
        b = V[(k + 1) % n]
        ex, ey = b.x - a.x, b.y - a.y
        wx, wy = a.x - qx, a.y - qy
        den = dx * ey - dy * ex
        if den == 0:
            if wx * dy - wy * dx != 0:
                continue
            for j, v in ((k, a), ((k + 1) % n, b)):
                t = ((v.x - qx) * dx + (v.y - qy) * dy)
                if t > 0 and v not in found:
                    found[v] = ("v", j)
            continue
        s_num = wx * dy - wy * dx
        # s = s_num / den must lie in [0, 1]
        if den > 0:
            if s_num < 0 or s_num > den:
                continue
        elif s_num > 0 or s_num < den:
            continue
        t_num = wx * ey - wy * ex
        if (t_num > 0) != (den > 0) or t_num == 0:
            continue
        if s_num == 0:
            p, feat = a, ("v", k)
        elif s_num == den:
            p, feat = b, ("v", (k + 1) % n)
        else:
            t = t_num / den
            p, feat = Point(qx + t * dx, qy + t * dy), ("e", k)
        if p not in found or feat[0] == "v":
            found[p] = feat
    dd = dx * dx + dy * dy
    events = []
    for p, feat in found.items():
        t = ((p.x - qx) * dx + (p.y - qy) * dy) / dd
        if tmax is not None and t >= tmax:
            continue
        events.append((t, p, feat, _status_at(P, feat, dx, dy)))
    events.sort(key=lambda ev: ev[0])
    return events


def _require_inside(P, *points):
    for p in points:
        if point_in_polygon(P, p) is Location.EXTERIOR:
            raise PointOutsidePolygon(f"{p} is outside the polygon")


def visible(P: SimplePolygon, a: Point, b: Point) -> bool:
    """True iff the closed segment ab lies in the closed polygon."""
    _require_inside(P, a, b)
    return _visible(P, a, b)


def _visible(P, a, b, feat_a=False):
    if a == b:
        return True
    dx, dy = b.x - a.x, b.y - a.y
    if feat_a is False:
        feat_a = _boundary_feature(P, a)
    if feat_a is not None and _status_at(P, feat_a, dx, dy) == OUTSIDE:
        return False
    for t, p, feat, status in _ray_events(P, a, dx, dy, tmax=1):
        if status == OUTSIDE:
            return False
    return True


def _sector_mid(d1, d2):
    c = d1[0] * d2[1] - d1[1] * d2[0]
    if c > 0:
        return (d1[0] + d2[0], d1[1] + d2[1])
    if c < 0:
        return (-d1[0] - d2[0], -d1[1] - d2[1])
    return (-d1[1], d1[0])


def _first_hit(P: SimplePolygon, q: Point, dx, dy) -> int:
    """Index of the first edge crossed by a ray that meets no vertex."""
    best_t, best_k = None, None
    V, n = P.vertices, P.n
    for k in range(n):
        a = V[k]
        b = V[(k + 1) % n]
        ex, ey = b.x - a.x, b.y - a.y
        den = dx * ey - dy * ex
        if den == 0:
            continue
        wx, wy = a.x - q.x, a.y - q.y
        s = (wx * dy - wy * dx) / den
        if s < 0 or s > 1:
            continue
        t = (wx * ey - wy * ex) / den
        if t <= 0:
            continue
        if best_t is None or t < best_t:
            best_t, best_k = t, k
    return best_k


def _incident_edges(P, feat):
    kind, idx = feat
    if kind == "e":
        return (idx,)
    return ((idx - 1) % P.n, idx)


def _sweep(P: SimplePolygon, q: Point, owner=None) -> VisibilityPolygon:
    qfeat = _boundary_feature(P, q)

    rays = {}
    for v in P.vertices:
        if v == q:
            continue
        dx, dy = v.x - q.x, v.y - q.y
        key = direction_key(dx, dy)
        if key not in rays:
            rays[key] = (dx, dy)
    dirs = [rays[k] for k in sorted(rays)]
    K = len(dirs)

    # sector k lies strictly between critical rays k and k+1
    hits = []
    for k in range(K):
        mx, my = _sector_mid(dirs[k], dirs[(k + 1) % K])
        if qfeat is not None and _status_at(P, qfeat, mx, my) != INSIDE:
            hits.append(None)
        else:
            hits.append(_first_hit(P, q, mx, my))

    touched = set()
    seen_vertices = set()
    if qfeat is not None:
        touched.update(_incident_edges(P, qfeat))
        if qfeat[0] == "v":
            seen_vertices.add(qfeat[1])
    for h in hits:
        if h is not None:
            touched.add(h)

    def limit(edge, d):
        if edge is None:
            return q
        e = P.edges[edge]
        return line_intersection(q, d, e.a, e.b)

    chain = []  # (point, tag of the edge leaving it)
    windows = []
    for k in range(K):
        d = dirs[k]
        dx, dy = d
        prev_lim = limit(hits[k - 1], d)
        next_lim = limit(hits[k], d)

        status0 = INSIDE if qfeat is None else _status_at(P, qfeat, dx, dy)
        events = _ray_events(P, q, dx, dy)
        # visible prefix of the ray: (t, point, status of the interval after it)
        walk = [(0, q, status0)]
        if status0 != OUTSIDE:
            for t, p, feat, status in events:
                walk.append((t, p, status))
                touched.update(_incident_edges(P, feat))
                if feat[0] == "v":
                    seen_vertices.add(feat[1])
                if status == OUTSIDE:
                    break

        def tpar(p):
            return (p.x - q.x) * dx + (p.y - q.y) * dy

        t_prev, t_next = tpar(prev_lim), tpar(next_lim)
        t_lo, t_hi = min(t_prev, t_next), max(t_prev, t_next)
        dd = dx * dx + dy * dy
        # walk parameters are relative to d; rescale limits to match
        t_lo, t_hi = t_lo / dd, t_hi / dd
        t_far = walk[-1][0]
        assert t_far >= t_hi, "closed visibility must reach the sector limits"
        walk_ts = {w[0] for w in walk}
        assert t_lo in walk_ts and t_hi in walk_ts, "sector limits must be ray events"

        # pieces along the ray from q outward, each with its interval status
        pieces = []
        for i in range(len(walk) - 1):
            t0, p0, st = walk[i]
            t1, p1, _ = walk[i + 1]
            pieces.append((t0, p0, t1, p1, st))
        outward = []
        for t0, p0, t1, p1, st in pieces:
            if t1 <= t_lo:
                continue
            if st == ALONG:
                tag = EdgeTag.ON_POLYGON_BOUNDARY
            elif t1 <= t_hi:
                tag = EdgeTag.WINDOW
            else:
                tag = EdgeTag.SPIKE
            outward.append((p0, p1, tag, st, t0, t1))

        # windows: maximal runs of interior intervals between the limits
        if t_hi > t_lo:
            side = Side.LEFT if t_next > t_prev else Side.RIGHT
            run = None
            for p0, p1, tag, st, t0, t1 in outward:
                if t1 > t_hi:
                    break
                if tag is EdgeTag.WINDOW:
                    run = (run[0], p1) if run else (p0, p1)
                elif run:
                    windows.append(Window(Segment(*run), owner, side))
                    run = None
            if run:
                windows.append(Window(Segment(*run), owner, side))

        # boundary: prev_lim -> far point -> next_lim along the ray
        far = walk[-1][1]
        if prev_lim == far:
            out_leg = []
        else:
            out_leg = [(p0, tag) for p0, p1, tag, st, t0, t1 in outward if t0 >= t_prev / dd]
        if next_lim == far:
            in_leg = []
        else:
            in_leg = [(p1, tag) for p0, p1, tag, st, t0, t1 in reversed(outward)
                      if t1 > t_next / dd]
        if not out_leg:
            chain.append((prev_lim, None))
        chain.extend(out_leg)
        if in_leg:
            chain.append((far, in_leg[0][1]))
            for j in range(1, len(in_leg)):
                chain.append((in_leg[j][0], in_leg[j][1]))
            chain.append((next_lim, EdgeTag.ON_POLYGON_BOUNDARY))
        else:
            chain.append((far, EdgeTag.ON_POLYGON_BOUNDARY))

    verts, tags = _clean_chain(chain)
    start = 0
    if q in verts:
        start = verts.index(q)
    else:
        start = verts.index(min(verts))
    verts = verts[start:] + verts[:start]
    tags = tags[start:] + tags[:start]
    windows.sort(key=lambda w: (w.segment.a, w.segment.b))
    return VisibilityPolygon(q, tuple(verts), tuple(tags), windows,
                             frozenset(seen_vertices), frozenset(touched))


def _clean_chain(chain):
    """Drop repeated points and merge collinear pieces with equal tags."""
    pts, tags = [], []
    for p, tag in chain:
        if pts and pts[-1] == p:
            if tag is not None:
                tags[-1] = tag
            continue
        pts.append(p)
        tags.append(tag)
    while len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
        tags.pop()
    tags = [t if t is not None else EdgeTag.ON_POLYGON_BOUNDARY for t in tags]
    changed = True
    while changed and len(pts) > 3:
        changed = False
        i = 0
        while i < len(pts) and len(pts) > 3:
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if tags[i - 1] is tags[i] and cross(a.x, a.y, b.x, b.y, c.x, c.y) == 0 \
                    and (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) > 0:
                del pts[i]
                del tags[i]
                changed = True
            else:
                i += 1
    return pts, tags


def visibility_polygon(P: SimplePolygon, q: Point) -> VisibilityPolygon:
    """The closed visibility polygon VP(P, q) with its edges tagged."""
    _require_inside(P, q)
    return _sweep(P, q, P.vertex_index(q))


def windows_of_vertex(P: SimplePolygon, i: int) -> list:
    return list(_sweep(P, P.vertices[i], owner=i).windows)


def all_windows(P: SimplePolygon) -> list:
    out = []
    for i in range(P.n):
        out.extend(windows_of_vertex(P, i))
    return out
