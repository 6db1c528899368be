import numpy as np
import pytest
from hypothesis import given, settings

from artgallery.oracle import (comb, exact_min_edge_guards, exact_min_vertex_guards,
                               random_interior_points, random_simple, regular_convex,
                               verify_coverage, weakly_visible)
from artgallery.pipeline import (GuardKind, analyze, edge_meets,
                                 single_point_visibility_membership, solve_eg, solve_vg,
                                 stats, weakly_visible_edges)
from artgallery.suite import face_samples
from artgallery.visibility import visibility_polygon

from conftest import pt
from strategies import polygons, seeds


@pytest.mark.parametrize("n", [3, 4, 7, 12, 25])
def test_convex_one_guard(n):
    P = regular_convex(n)
    vg, eg = solve_vg(P), solve_eg(P)
    assert vg.guards == [0] and eg.guards == [0]
    assert (vg.region_count, vg.sink_count, vg.window_count) == (1, 1, 0)
    st = stats(P)
    assert (st.window_count, st.r, st.m) == (0, 1, 1)


def test_L_vertex_guards(L):
    sol = solve_vg(L)
    assert sol.kind is GuardKind.VERTEX_GUARDS
    assert sol.guards == [0] and sol.cover_order == [0]
    assert (sol.window_count, sol.region_count, sol.sink_count) == (4, 5, 2)
    assert sol.repaired_regions == []


def test_L_edge_guards(L):
    sol = solve_eg(L)
    assert sol.kind is GuardKind.EDGE_GUARDS
    assert sol.guards == [0]


def test_L_stats(L):
    st = stats(L)
    assert (st.n, st.window_count, st.r, st.m) == (6, 4, 5, 2)
    assert st.incomparable_edge_count == 0 and st.promoted_sinks == 0
    assert set(st.timings) == {"visibility", "arrangement", "dual", "sinks"}


def test_comb3_guards(comb3):
    A = analyze(comb3)
    d = A.decomposition
    assert len(solve_vg(comb3, A).guards) == 3 == len(exact_min_vertex_guards(comb3, decomp=d))
    assert len(solve_eg(comb3, A).guards) == 3 == len(exact_min_edge_guards(comb3, decomp=d))


def test_membership_examples(L):
    vp = visibility_polygon(L, pt(2, 0))
    assert not single_point_visibility_membership(vp, pt(1, 2))
    assert single_point_visibility_membership(vp, pt(1, 1))
    P = regular_convex(6)
    vp = visibility_polygon(P, P.vertices[2])
    assert all(single_point_visibility_membership(vp, v) for v in P.vertices)


def test_edge_meets_single_point(L):
    # from (2,0) the top edge (1,2)-(0,2) is reached only at (0,2)
    vp = visibility_polygon(L, pt(2, 0))
    assert edge_meets(vp, pt(1, 2), pt(0, 2))
    # touches only at its endpoint (1,1)
    assert edge_meets(vp, pt(1, 1), pt(1, 2))


def test_random_30_has_fewer_sinks_than_regions():
    for seed in range(3):
        st = stats(random_simple(30, seed))
        assert st.r > 1 and st.m < st.r


@given(polygons, seeds)
def test_weakly_visible_edges_match_oracle(P, seed):
    for q in random_interior_points(P, 3, seed):
        got = weakly_visible_edges(P, q)
        want = {k for k in range(P.n) if weakly_visible(P, q, k)}
        assert got == want


@settings(max_examples=25)
@given(polygons, seeds)
def test_weak_visibility_constant_on_faces(P, seed):
    A = analyze(P)
    rng = np.random.default_rng(seed)
    faces = A.decomposition.faces
    picks = rng.choice(len(faces), size=min(10, len(faces)), replace=False)
    for fid in picks:
        f = faces[int(fid)]
        want = {k for k in range(P.n) if weakly_visible(P, f.representative, k)}
        for p in face_samples(f, 3, rng):
            assert {k for k in range(P.n) if weakly_visible(P, p, k)} == want


@settings(max_examples=30)
@given(polygons)
def test_solutions_cover_every_region(P):
    A = analyze(P)
    d = A.decomposition
    for sol, kind in ((solve_vg(P, A), "vg"), (solve_eg(P, A), "eg")):
        assert not verify_coverage(P, d, sol.guards, kind, samples=0).uncovered_regions
        assert sol.sink_count <= sol.region_count


@given(polygons)
def test_window_count_bound(P):
    st = stats(P)
    assert st.window_count <= max(0, P.n * (P.n - 3))
    assert st.m <= st.r


def test_deterministic(comb3):
    a, b = solve_vg(comb3), solve_vg(comb3)
    assert (a.guards, a.cover_order) == (b.guards, b.cover_order)
    c, d = solve_eg(comb3), solve_eg(comb3)
    assert (c.guards, c.cover_order) == (d.guards, d.cover_order)


def test_shared_analysis_matches_fresh(L, L_analysis):
    assert solve_vg(L, L_analysis).guards == solve_vg(L).guards
    assert solve_eg(L, L_analysis).guards == solve_eg(L).guards
