"""Brute-force checkers and polygon generators.

Nothing here uses the sweep: visibility is decided by cutting the segment
at every boundary contact and testing each piece's midpoint, and weak
visibility by testing every point of the edge where visibility can change.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from gmpy2 import mpq

from .arrangement import RegionDecomposition
from .cover import CoverInstance, exact_cover
from .errors import GenerationFailed, OracleCapExceeded, PolygonError
from .geometry import (Location, Point, Segment, SimplePolygon, cross,
                       point_in_polygon, segment_intersect, validate_polygon)

__all__ = [
    "Family", "PolygonGenerator", "generate", "segment_in_polygon",
    "weakly_visible", "region_guard_masks", "exact_min_vertex_guards",
    "exact_min_edge_guards", "Coverage", "verify_coverage", "comb",
    "staircase", "regular_convex", "random_simple", "DEFAULT_CAP",
]

DEFAULT_CAP = 8


def segment_in_polygon(P: SimplePolygon, a: Point, b: Point) -> bool:
    """Closed segment ab inside closed P, by subdivision at edge contacts."""
    if a == b:
        return point_in_polygon(P, a) is not Location.EXTERIOR
    s = Segment(a, b)
    xs = (min(a.x, b.x), max(a.x, b.x))
    ys = (min(a.y, b.y), max(a.y, b.y))
    cuts = {a, b}
    for e in P.edges:
        if max(e.a.x, e.b.x) < xs[0] or min(e.a.x, e.b.x) > xs[1] \
                or max(e.a.y, e.b.y) < ys[0] or min(e.a.y, e.b.y) > ys[1]:
            continue
        hit = segment_intersect(s, e)
        if hit is None:
            continue
        if isinstance(hit, Segment):
            cuts.update((hit.a, hit.b))
        else:
            cuts.add(hit)
    dx, dy = b.x - a.x, b.y - a.y
    pts = sorted(cuts, key=lambda p: (p.x - a.x) * dx + (p.y - a.y) * dy)
    for p, q in zip(pts, pts[1:]):
        mid = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
        if point_in_polygon(P, mid) is Location.EXTERIOR:
            return False
    return point_in_polygon(P, a) is not Location.EXTERIOR \
        and point_in_polygon(P, b) is not Location.EXTERIOR


def weakly_visible(P: SimplePolygon, x: Point, k: int) -> bool:
    """Does some point of edge k see x?

    Along the edge, visibility from x can only change where the line of
    sight passes a polygon vertex, and such vertices lie in the triangle
    spanned by x and the edge.  Testing those breakpoints and the midpoints
    between them is therefore exhaustive.
    """
    e = P.edges[k]
    a, b = e.a, e.b
    if cross(a.x, a.y, b.x, b.y, x.x, x.y) == 0:
        if _between(x, a, b):
            return True
        # collinear from outside: the nearer endpoint decides
        return segment_in_polygon(P, x, a) or segment_in_polygon(P, x, b)
    cand = {a, b}
    orient = cross(a.x, a.y, b.x, b.y, x.x, x.y) > 0
    ex, ey = b.x - a.x, b.y - a.y
    for v in P.vertices:
        if v == x:
            continue
        # only vertices in the closed triangle (x, a, b) can touch a sight line
        c1 = cross(x.x, x.y, a.x, a.y, v.x, v.y)
        c2 = cross(a.x, a.y, b.x, b.y, v.x, v.y)
        c3 = cross(b.x, b.y, x.x, x.y, v.x, v.y)
        if orient:
            inside = c1 >= 0 and c2 >= 0 and c3 >= 0
        else:
            inside = c1 <= 0 and c2 <= 0 and c3 <= 0
        if not inside:
            continue
        dx, dy = v.x - x.x, v.y - x.y
        den = dx * ey - dy * ex
        if den == 0:
            continue
        t = ((a.x - x.x) * ey - (a.y - x.y) * ex) / den
        cand.add(Point(x.x + t * dx, x.y + t * dy))
    pts = sorted(cand, key=lambda p: (p.x - a.x) * ex + (p.y - a.y) * ey)
    tests = list(pts) + [Point((p.x + q.x) / 2, (p.y + q.y) / 2) for p, q in zip(pts, pts[1:])]
    return any(segment_in_polygon(P, x, u) for u in tests)


def _between(p, a, b):
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def region_guard_masks(P: SimplePolygon, decomp: RegionDecomposition, kind: str,
                       regions=None) -> list:
    """For every guard, the bitmask of regions (by position in ``regions``)
    whose representative it sees."""
    faces = decomp.faces if regions is None else [decomp.faces[i] for i in regions]
    masks = [0] * P.n
    for j, f in enumerate(faces):
        rep = f.representative
        for g in range(P.n):
            if kind == "vg":
                ok = segment_in_polygon(P, P.vertices[g], rep)
            else:
                ok = weakly_visible(P, rep, g)
            if ok:
                masks[g] |= 1 << j
    return masks


def _exact_min(P, decomp, kind, cap, regions):
    masks = region_guard_masks(P, decomp, kind, regions)
    size = decomp.r if regions is None else len(regions)
    sol = exact_cover(CoverInstance(size, list(enumerate(masks))), cap)
    if sol is None:
        raise OracleCapExceeded(cap)
    return list(sol.chosen)


def _decomp(P, decomp):
    if decomp is None:
        from .pipeline import analyze
        decomp = analyze(P).decomposition
    return decomp


def exact_min_vertex_guards(P: SimplePolygon, cap: int = DEFAULT_CAP,
                            decomp: RegionDecomposition | None = None,
                            regions=None) -> list:
    """Minimum vertex set seeing every region (or only ``regions``)."""
    return _exact_min(P, _decomp(P, decomp), "vg", cap, regions)


def exact_min_edge_guards(P: SimplePolygon, cap: int = DEFAULT_CAP,
                          decomp: RegionDecomposition | None = None,
                          regions=None) -> list:
    return _exact_min(P, _decomp(P, decomp), "eg", cap, regions)


@dataclass
class Coverage:
    uncovered_regions: list
    uncovered_samples: list

    @property
    def covered(self) -> bool:
        return not self.uncovered_regions and not self.uncovered_samples

    def __bool__(self):
        return self.covered


def random_interior_points(P: SimplePolygon, count: int, seed: int = 0, denom: int = 1024):
    rng = np.random.default_rng(seed)
    xs = [p.x for p in P.vertices]
    ys = [p.y for p in P.vertices]
    x0, y0 = min(xs), min(ys)
    wx, wy = max(xs) - x0, max(ys) - y0
    out = []
    while len(out) < count:
        u, v = rng.integers(1, denom, size=2)
        p = Point(x0 + wx * mpq(int(u), denom), y0 + wy * mpq(int(v), denom))
        if point_in_polygon(P, p) is Location.INTERIOR:
            out.append(p)
    return out


def verify_coverage(P: SimplePolygon, decomp: RegionDecomposition, guards, kind: str,
                    samples: int = 1000, seed: int = 0) -> Coverage:
    """Check every region representative and ``samples`` random interior
    points against the guards, with the brute-force predicates."""
    kind = getattr(kind, "value", kind)

    def sees(p):
        if kind == "vg":
            return any(segment_in_polygon(P, P.vertices[g], p) for g in guards)
        return any(weakly_visible(P, p, g) for g in guards)

    bad_regions = [f.id for f in decomp.faces if not sees(f.representative)]
    bad_samples = [p for p in random_interior_points(P, samples, seed) if not sees(p)]
    return Coverage(bad_regions, bad_samples)


# ---------------------------------------------------------------- generators

class Family(enum.Enum):
    RANDOM_SIMPLE = "random"
    COMB = "comb"
    STAIRCASE = "staircase"
    REGULAR_CONVEX = "convex"


@dataclass(frozen=True)
class PolygonGenerator:
    family: Family
    n: int = 0
    seed: int = 0
    # teeth for COMB, steps for STAIRCASE
    k: int = 0


def generate(gen: PolygonGenerator) -> SimplePolygon:
    if gen.family is Family.COMB:
        return comb(gen.k)
    if gen.family is Family.STAIRCASE:
        return staircase(gen.k)
    if gen.family is Family.REGULAR_CONVEX:
        return regular_convex(gen.n)
    return random_simple(gen.n, gen.seed)


def comb(k: int) -> SimplePolygon:
    """Pinwheel comb: ``k`` hooked teeth on ``4k`` vertices, needing exactly
    ``k`` vertex guards and ``k`` edge guards (checked for k = 2, 3, 4).

    A convex hub (a regular k-gon, or a segment for k = 2) carries one pocket
    per side.  In the frame of a side, with ``u`` running along it and ``n``
    the outward normal of the same length, a pocket is

        p = (0, 0), a = (1/2, 1/2), t = (3/4, -1), b = (3/5, 1/2)

    followed by the next hub corner at (0, 1).  The thin tooth a-t-b is
    bent sideways, and the edge from b back to the hub catches everything
    its tip can see, so points near the tip see only the pocket's own four
    edges.  Vertex 0 is the first tooth's inner corner ``a``.
    """
    if k < 2:
        raise ValueError("comb needs at least two teeth")
    if k == 2:
        hub = [(0, 0), (0, 100)]
    else:
        hub = [(round(100 * math.cos(2 * math.pi * j / k + math.pi / 2)),
                round(100 * math.sin(2 * math.pi * j / k + math.pi / 2))) for j in range(k)]
    # pocket offsets in twentieths of a side
    pocket = [(0, 0), (10, 10), (15, -20), (12, 10)]
    pts = []
    for j in range(k):
        (px, py), (qx, qy) = hub[j], hub[(j + 1) % k]
        ux, uy = qx - px, qy - py
        for al, be in pocket:
            pts.append((20 * px + al * uy + be * ux, 20 * py - al * ux + be * uy))
    return validate_polygon(pts[1:] + pts[:1])


def staircase(k: int) -> SimplePolygon:
    """Orthogonal staircase with ``k`` steps (``2k + 2`` vertices).

    ``staircase(2)`` is the L-shape.
    """
    if k < 1:
        raise ValueError("staircase needs at least one step")
    pts = [(0, 0), (k, 0)]
    for j in range(k):
        pts.append((k - j, j + 1))
        pts.append((k - j - 1, j + 1))
    pts[-1] = (0, k)
    return validate_polygon(_dedupe(pts))


def _dedupe(pts):
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    return out


def regular_convex(n: int, radius: int = 10_000) -> SimplePolygon:
    """Strictly convex n-gon on integer coordinates near a circle."""
    if n < 3:
        raise ValueError("need n >= 3")
    while True:
        pts = [(round(radius * math.cos(2 * math.pi * i / n)),
                round(radius * math.sin(2 * math.pi * i / n))) for i in range(n)]
        P = validate_polygon(pts)
        V = P.vertices
        if all(cross(V[i - 1].x, V[i - 1].y, V[i].x, V[i].y,
                     V[(i + 1) % n].x, V[(i + 1) % n].y) > 0 for i in range(n)):
            return P
        radius *= 4


def random_simple(n: int, seed: int, grid: int | None = None,
                  retries: int = 200) -> SimplePolygon:
    """Random simple polygon on small integer coordinates.

    Draws ``n`` distinct grid points in random order and removes crossings
    by 2-opt moves; samples whose result is degenerate are redrawn.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    grid = grid or max(16, 2 * n)
    rng = np.random.default_rng(seed)
    for _ in range(retries):
        flat = rng.choice(grid * grid, size=n, replace=False)
        pts = [Point(mpq(int(f) // grid), mpq(int(f) % grid)) for f in flat]
        pts = _untangle(pts)
        if pts is None:
            continue
        try:
            return validate_polygon(pts)
        except PolygonError:
            continue
    raise GenerationFailed(f"no simple polygon with n={n} after {retries} draws")


def _proper_cross(p, q, r, s):
    d1 = cross(p.x, p.y, q.x, q.y, r.x, r.y)
    d2 = cross(p.x, p.y, q.x, q.y, s.x, s.y)
    d3 = cross(r.x, r.y, s.x, s.y, p.x, p.y)
    d4 = cross(r.x, r.y, s.x, s.y, q.x, q.y)
    return d1 * d2 < 0 and d3 * d4 < 0


def _untangle(pts, max_moves=10_000):
    n = len(pts)
    moves = 0
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                if _proper_cross(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n]):
                    pts[i + 1:j + 1] = pts[i + 1:j + 1][::-1]
                    changed = True
                    moves += 1
                    if moves > max_moves:
                        return None
    return pts
