"""End-to-end vertex-guard and edge-guard solvers over sinks."""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from .arrangement import RegionDecomposition, build_decomposition
from .cover import CoverInstance, greedy_cover
from .errors import InvariantViolation
from .geometry import Point, SimplePolygon, on_segment
from .sinkgraph import DualGraph, SinkSet, build_dual, find_sinks
from .visibility import VisibilityPolygon, _sweep, all_windows

__all__ = [
    "GuardKind", "Analysis", "GuardSolution", "DecompositionStats", "analyze",
    "solve_vg", "solve_eg", "stats", "single_point_visibility_membership",
    "edge_meets", "weakly_visible_edges",
]


class GuardKind(enum.Enum):
    VERTEX_GUARDS = "vg"
    EDGE_GUARDS = "eg"


@dataclass
class Analysis:
    """Windows, regions, dual graph and sinks, shared by both problems."""
    polygon: SimplePolygon
    windows: list
    decomposition: RegionDecomposition
    dual: DualGraph
    sinks: SinkSet
    timings: dict = field(default_factory=dict)


@dataclass
class GuardSolution:
    kind: GuardKind
    guards: list
    sink_count: int
    region_count: int
    window_count: int
    cover_order: list
    # regions added to the universe because sink coverage did not transfer
    repaired_regions: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)


@dataclass
class DecompositionStats:
    n: int
    window_count: int
    r: int
    m: int
    incomparable_edge_count: int
    promoted_sinks: int
    window_crossings: int
    timings: dict = field(default_factory=dict)


def analyze(P: SimplePolygon) -> Analysis:
    timings = {}
    t0 = time.perf_counter()
    W = all_windows(P)
    t1 = time.perf_counter()
    decomp = build_decomposition(P, W)
    t2 = time.perf_counter()
    dual = build_dual(decomp)
    t3 = time.perf_counter()
    sinks = find_sinks(dual)
    t4 = time.perf_counter()
    timings.update(visibility=t1 - t0, arrangement=t2 - t1, dual=t3 - t2, sinks=t4 - t3)
    return Analysis(P, W, decomp, dual, sinks, timings)


def single_point_visibility_membership(VP: VisibilityPolygon, v: Point) -> bool:
    return VP.contains(v)


def edge_meets(VP: VisibilityPolygon, a: Point, b: Point) -> bool:
    """Does the closed polygon edge ab share a point with the closed VP?

    Every point of P's boundary inside VP is on VP's boundary, so it is a VP
    vertex on ab, or ab passes over a whole VP side and brings an endpoint.
    """
    for p in VP.vertices:
        if on_segment(p, a, b):
            return True
    return VP.contains(a) or VP.contains(b)


def weakly_visible_edges(P: SimplePolygon, q: Point, VP: VisibilityPolygon | None = None):
    if VP is None:
        VP = _sweep(P, q)
    return frozenset(k for k, e in enumerate(P.edges) if edge_meets(VP, e.a, e.b))


def _sink_views(analysis):
    P = analysis.polygon
    faces = analysis.decomposition.faces
    return [_sweep(P, faces[s].representative) for s in analysis.sinks.sinks]


def _solve(analysis, kind, element_sets, covers_region, extra_set):
    """Greedy sink cover plus the region-coverage check both problems share.

    ``element_sets[j]`` is the set of guards seeing universe element j;
    ``extra_set(face)`` computes the same for a face outside the universe.
    """
    faces = analysis.decomposition.faces
    universe = list(analysis.sinks.sinks)
    sets_of = list(element_sets)
    repaired = []
    n_guards = analysis.polygon.n
    while True:
        masks = [0] * n_guards
        for j, seen_by in enumerate(sets_of):
            for g in seen_by:
                masks[g] |= 1 << j
        sol = greedy_cover(CoverInstance(len(universe), list(enumerate(masks))))
        guards = sorted(sol.chosen)
        missing = [f.id for f in faces if not covers_region(guards, f)]
        if not missing:
            break
        # only reachable with conflicting carriers: cover those faces directly
        if any(f in universe for f in missing):
            raise InvariantViolation(f"regions {missing} uncovered by a sink cover")
        repaired.extend(missing)
        for f in missing:
            universe.append(f)
            sets_of.append(extra_set(f))
    return GuardSolution(kind, guards, analysis.sinks.m, analysis.decomposition.r,
                         len(analysis.windows), list(sol.chosen), repaired,
                         dict(analysis.timings))


def solve_vg(P: SimplePolygon, analysis: Analysis | None = None) -> GuardSolution:
    if analysis is None:
        analysis = analyze(P)
    t0 = time.perf_counter()
    V = P.vertices

    def visible_vertices(vp):
        return {i for i, v in enumerate(V) if single_point_visibility_membership(vp, v)}

    faces = analysis.decomposition.faces
    VV = [visible_vertices(vp) for vp in _sink_views(analysis)]
    guard_views = {}

    def covers(guards, face):
        for g in guards:
            if g not in guard_views:
                guard_views[g] = _sweep(P, V[g], owner=g)
            if guard_views[g].contains(face.representative):
                return True
        return False

    sol = _solve(analysis, GuardKind.VERTEX_GUARDS, VV, covers,
                 lambda f: visible_vertices(_sweep(P, faces[f].representative)))
    sol.timings["cover"] = time.perf_counter() - t0
    return sol


def solve_eg(P: SimplePolygon, analysis: Analysis | None = None) -> GuardSolution:
    if analysis is None:
        analysis = analyze(P)
    t0 = time.perf_counter()
    faces = analysis.decomposition.faces
    VE = [weakly_visible_edges(P, vp.viewpoint, vp) for vp in _sink_views(analysis)]
    region_views = {}

    def covers(guards, face):
        if face.id not in region_views:
            region_views[face.id] = weakly_visible_edges(P, face.representative)
        return any(g in region_views[face.id] for g in guards)

    sol = _solve(analysis, GuardKind.EDGE_GUARDS, VE, covers,
                 lambda f: weakly_visible_edges(P, faces[f].representative))
    sol.timings["cover"] = time.perf_counter() - t0
    return sol


def stats(P: SimplePolygon, analysis: Analysis | None = None) -> DecompositionStats:
    if analysis is None:
        analysis = analyze(P)
    d = analysis.decomposition
    conflicting = sum(1 for e in d.edges
                      if len({c.side for c in e.carriers}) > 1)
    return DecompositionStats(
        n=P.n, window_count=len(analysis.windows), r=d.r, m=analysis.sinks.m,
        incomparable_edge_count=conflicting,
        promoted_sinks=len(analysis.sinks.promoted),
        window_crossings=d.window_crossings,
        timings=dict(analysis.timings))
