"""Approximate minimum vertex and edge guards for simple polygons.

The polygon is cut along the windows of all its vertices into visibility
regions; only the sink regions of the dual orientation need covering, and a
greedy set cover over them gives a logarithmic-factor approximation.

>>> from artgallery import parse_poly, solve_vg
>>> P = parse_poly("6\\n0 0\\n2 0\\n2 1\\n1 1\\n1 2\\n0 2\\n")
>>> solve_vg(P).guards
[0]
"""
from .arrangement import (ArrangementEdge, Carrier, Region, RegionDecomposition,
                          build_decomposition, face_at, visibility_set)
from .cover import CoverInstance, CoverSolution, exact_cover, greedy_cover
from .errors import *  # noqa: F401,F403
from .geometry import (Location, Orientation, Point, Segment, SimplePolygon,
                       make_point, orientation, point_in_polygon, segment_intersect,
                       validate_polygon)
from .oracle import (Coverage, Family, PolygonGenerator, comb, exact_min_edge_guards,
                     exact_min_vertex_guards, generate, random_simple, regular_convex,
                     staircase, verify_coverage)
from .pipeline import (Analysis, DecompositionStats, GuardKind, GuardSolution, analyze,
                       solve_eg, solve_vg, stats)
from .polyfile import digest, parse_poly, read_poly, serialize_poly
from .render import render_svg
from .sinkgraph import Arc, DualGraph, SinkSet, build_dual, find_sinks, span
from .visibility import (EdgeTag, Side, VisibilityPolygon, Window, all_windows, visible,
                         visibility_polygon, windows_of_vertex)

__version__ = "0.1.0"
