"""Exact rational planar primitives.

Every coordinate is a :class:`gmpy2.mpq`; no predicate in this package ever
rounds. Points are plain named tuples so they hash and compare cheaply.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from gmpy2 import mpq

from .errors import (DegenerateEdge, DegenerateSegment, SelfIntersecting,
                     TooFewVertices)

MPQ = type(mpq())

__all__ = [
    "rational", "Point", "Segment", "Orientation", "Location", "SimplePolygon",
    "orientation", "segment_intersect", "point_in_polygon", "validate_polygon",
    "make_point", "cross", "on_segment", "direction_key", "line_intersection",
]


def rational(value) -> mpq:
    """Convert ints, decimal/fraction strings, floats and Fractions exactly.

    Floats go through their shortest repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(value, (int, Fraction)) or type(value) is MPQ:
        return mpq(value)
    if isinstance(value, float):
        return mpq(repr(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            return mpq(text)
        except ValueError:
            # mpq rejects some forms Fraction accepts ("1e-3", "+2")
            return mpq(Fraction(text))
    return mpq(value)


class Point(NamedTuple):
    x: mpq
    y: mpq

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def make_point(x, y) -> Point:
    return Point(rational(x), rational(y))


def cross(ox, oy, ax, ay, bx, by):
    """Cross product of (a - o) and (b - o) on raw coordinates."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    d = cross(a.x, a.y, b.x, b.y, c.x, c.y)
    if d > 0:
        return Orientation.CCW
    if d < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateSegment(f"zero-length segment at {self.a}")

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)

    def canonical(self) -> "Segment":
        return self if self.a < self.b else Segment(self.b, self.a)

    @property
    def midpoint(self) -> Point:
        return Point((self.a.x + self.b.x) / 2, (self.a.y + self.b.y) / 2)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab."""
    if cross(a.x, a.y, b.x, b.y, p.x, p.y) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def line_intersection(p: Point, d: tuple, a: Point, b: Point) -> Point:
    """Intersection of the line p + t*d with the line through a and b.

    The lines must not be parallel.
    """
    ex, ey = b.x - a.x, b.y - a.y
    den = d[0] * ey - d[1] * ex
    t = ((a.x - p.x) * ey - (a.y - p.y) * ex) / den
    return Point(p.x + t * d[0], p.y + t * d[1])


def segment_intersect(s: Segment, t: Segment):
    """Classify the intersection of two closed segments.

    Returns ``None`` when they are disjoint, a :class:`Point` for a single
    common point, or a :class:`Segment` for a collinear overlap of positive
    length.
    """
    a, b, c, d = s.a, s.b, t.a, t.b
    d1 = cross(a.x, a.y, b.x, b.y, c.x, c.y)
    d2 = cross(a.x, a.y, b.x, b.y, d.x, d.y)
    if d1 == 0 and d2 == 0:
        return _collinear_overlap(a, b, c, d)
    d3 = cross(c.x, c.y, d.x, d.y, a.x, a.y)
    d4 = cross(c.x, c.y, d.x, d.y, b.x, b.y)
    if (d1 > 0 and d2 > 0) or (d1 < 0 and d2 < 0):
        return None
    if (d3 > 0 and d4 > 0) or (d3 < 0 and d4 < 0):
        return None
    if d1 == 0:
        return c
    if d2 == 0:
        return d
    if d3 == 0:
        return a
    if d4 == 0:
        return b
    tt = d3 / (d3 - d4)
    return Point(a.x + tt * (b.x - a.x), a.y + tt * (b.y - a.y))


def _collinear_overlap(a, b, c, d):
    # project on the dominant axis of ab
    if a.x != b.x:
        key = lambda p: p.x  # noqa: E731
    else:
        key = lambda p: p.y  # noqa: E731
    lo1, hi1 = sorted((a, b), key=key)
    lo2, hi2 = sorted((c, d), key=key)
    lo = lo1 if key(lo1) >= key(lo2) else lo2
    hi = hi1 if key(hi1) <= key(hi2) else hi2
    if key(lo) > key(hi):
        return None
    if lo == hi:
        return lo
    return Segment(lo, hi)


def direction_key(dx, dy) -> tuple:
    """Exact sort key that orders nonzero directions by polar angle in [0, 2pi).

    Uses the "diamond angle", a rational monotone stand-in for atan2.
    """
    if dy >= 0:
        if dx > 0:
            return (0, dy / (dx + dy))
        return (1, -dx / (dy - dx))
    if dx < 0:
        return (2, dy / (dx + dy))
    return (3, dx / (dx - dy))


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


class SimplePolygon:
    """A simple polygon with counter-clockwise vertices.

    The constructor trusts its input; use :func:`validate_polygon` for
    anything read from outside.
    """

    __slots__ = ("vertices", "n", "_index", "_edges", "_area")

    def __init__(self, vertices: Sequence[Point]):
        self.vertices = tuple(vertices)
        self.n = len(self.vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._edges = None
        self._area = None

    @property
    def edges(self) -> tuple:
        """Edge k joins vertex k to vertex (k+1) mod n."""
        if self._edges is None:
            v, n = self.vertices, self.n
            self._edges = tuple(Segment(v[k], v[(k + 1) % n]) for k in range(n))
        return self._edges

    def vertex_index(self, p: Point):
        return self._index.get(p)

    @property
    def area(self) -> mpq:
        if self._area is None:
            self._area = signed_area(self.vertices)
        return self._area

    def is_reflex(self, i: int) -> bool:
        v = self.vertices
        return orientation(v[i - 1], v[i], v[(i + 1) % self.n]) == Orientation.CW

    def __eq__(self, other):
        return isinstance(other, SimplePolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __len__(self):
        return self.n

    def __repr__(self):
        pts = ", ".join(f"({p.x}, {p.y})" for p in self.vertices)
        return f"SimplePolygon([{pts}])"


def signed_area(vertices: Sequence[Point]) -> mpq:
    s = mpq(0)
    n = len(vertices)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        s += p.x * q.y - p.y * q.x
    return s / 2


def point_in_polygon(P: SimplePolygon, q: Point) -> Location:
    return locate(P.vertices, q)


def locate(vertices: Sequence[Point], q: Point) -> Location:
    """Exact point location against a closed polygon given by its vertices.

    Works for weakly simple boundaries too (zero-width spikes count as
    boundary and do not change the winding number).
    """
    qx, qy = q.x, q.y
    n = len(vertices)
    winding = 0
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        c = cross(a.x, a.y, b.x, b.y, qx, qy)
        if c == 0 and min(a.x, b.x) <= qx <= max(a.x, b.x) \
                and min(a.y, b.y) <= qy <= max(a.y, b.y):
            return Location.BOUNDARY
        if a.y <= qy:
            if b.y > qy and c > 0:
                winding += 1
        elif b.y <= qy and c < 0:
            winding -= 1
    return Location.INTERIOR if winding != 0 else Location.EXTERIOR


def validate_polygon(vertices) -> SimplePolygon:
    """Check simplicity exhaustively and return a CCW :class:`SimplePolygon`.

    Accepts points or ``(x, y)`` pairs of anything :func:`rational` takes.
    A clockwise input is reversed (keeping vertex 0 first).
    """
    pts = [p if isinstance(p, Point) and type(p.x) is MPQ else make_point(*p)
           for p in vertices]
    n = len(pts)
    if n < 3:
        raise TooFewVertices(f"polygon needs at least 3 vertices, got {n}")
    for i in range(n):
        if pts[i] == pts[(i + 1) % n]:
            raise DegenerateEdge(f"repeated consecutive vertex {i}: {pts[i]}")
    edges = [Segment(pts[i], pts[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            hit = segment_intersect(edges[i], edges[j])
            if hit is None:
                continue
            if j == i + 1:
                shared = pts[j]
            elif i == 0 and j == n - 1:
                shared = pts[0]
            else:
                raise SelfIntersecting(f"edges {i} and {j} meet at {hit}")
            if hit != shared:
                raise SelfIntersecting(f"adjacent edges {i} and {j} overlap")
    area = signed_area(pts)
    if area == 0:
        raise SelfIntersecting("polygon has zero area")
    if area < 0:
        pts = [pts[0]] + pts[:0:-1]
    return SimplePolygon(pts)
