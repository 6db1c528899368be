"""Randomized property suite: every structural invariant on one instance.

``check_instance`` returns a report whose ``violations`` list is empty when
the instance passes; ``run_suite`` does this over a seeded batch of random
polygons.  Nothing here raises on a failed check, so one bad polygon never
hides the others.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import asdict, dataclass, field

import numpy as np
from gmpy2 import mpq

from .arrangement import visibility_set
from .errors import OracleCapExceeded
from .geometry import Location, Point, SimplePolygon, locate
from .oracle import (DEFAULT_CAP, exact_min_edge_guards, exact_min_vertex_guards,
                     random_simple, verify_coverage)
from .pipeline import analyze, solve_eg, solve_vg
from .polyfile import digest
from .sinkgraph import span
from .visibility import _sweep

__all__ = ["InstanceReport", "check_instance", "suite_polygons", "run_suite",
           "face_samples", "ratio_bound"]


@dataclass
class InstanceReport:
    label: str
    n: int
    digest: str
    windows: int
    r: int
    m: int
    vg_greedy: list
    eg_greedy: list
    # None when the oracle hit its cap
    vg_opt: int | None = None
    vg_opt_sinks: int | None = None
    eg_opt: int | None = None
    eg_opt_sinks: int | None = None
    violations: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def ratio_bound(m: int) -> float:
    return math.log(m) + 1 if m > 0 else 1.0


def face_samples(face, count: int, rng, denom: int = 4096, tries: int = 10_000):
    """Up to ``count`` random points strictly inside a face, by rejection."""
    V = face.boundary.vertices
    x0 = min(p.x for p in V)
    y0 = min(p.y for p in V)
    wx = max(p.x for p in V) - x0
    wy = max(p.y for p in V) - y0
    out = []
    for _ in range(tries):
        if len(out) == count:
            break
        u, v = rng.integers(1, denom, size=2)
        p = Point(x0 + wx * mpq(int(u), denom), y0 + wy * mpq(int(v), denom))
        if locate(V, p) is Location.INTERIOR:
            out.append(p)
    return out


def _acyclic(nodes, succ) -> bool:
    indeg = {u: 0 for u in nodes}
    for u in nodes:
        for v in succ[u]:
            indeg[v] += 1
    todo = deque(u for u in nodes if indeg[u] == 0)
    seen = 0
    while todo:
        u = todo.popleft()
        seen += 1
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                todo.append(v)
    return seen == len(nodes)


def _optimum(fn, P, cap, decomp, regions=None):
    try:
        return len(fn(P, cap=cap, decomp=decomp, regions=regions))
    except OracleCapExceeded:
        return None


def check_instance(P: SimplePolygon, label: str = "", *, cap: int = DEFAULT_CAP,
                   oracle: bool = True, samples: int = 1000, face_points: int = 10,
                   seed: int = 0) -> InstanceReport:
    """Run the pipeline on ``P`` and check it against every invariant.

    ``samples`` random interior points back up the region-representative
    coverage check; ``face_points`` points per face test that visibility
    really is constant on each face.
    """
    A = analyze(P)
    d, D, S = A.decomposition, A.dual, A.sinks
    vg, eg = solve_vg(P, A), solve_eg(P, A)
    rep = InstanceReport(label, P.n, digest(P), len(A.windows), d.r, S.m,
                         list(vg.guards), list(eg.guards))
    bad = rep.violations

    total = sum((f.area for f in d.faces), mpq(0))
    if total != P.area:
        bad.append(f"area: faces sum to {total}, polygon has {P.area}")
    if S.m > d.r:
        bad.append(f"m={S.m} exceeds r={d.r}")

    vis = [visibility_set(P, f) for f in d.faces]
    for e in d.edges:
        if len(e.carriers) != 1 or e.left_face is None or e.right_face is None:
            continue
        c = e.carriers[0]
        src = e.face_on(c.side)
        dst = e.right_face if src == e.left_face else e.left_face
        if not vis[dst] < vis[src]:
            bad.append(f"arc {src}->{dst}: visibility sets not strictly nested")
    if not D.incomparable_pairs and not _acyclic(D.nodes, D.succ):
        bad.append("dual graph has a cycle without conflicting carriers")

    covered = set()
    for s in S.sinks:
        covered |= span(D, s, S)
    if covered != set(D.nodes):
        bad.append(f"spans miss nodes {sorted(set(D.nodes) - covered)}")

    if face_points:
        rng = np.random.default_rng(seed)
        views = [_sweep(P, v, owner=i) for i, v in enumerate(P.vertices)]
        for f in d.faces:
            for p in face_samples(f, face_points, rng):
                seen = frozenset(i for i, vp in enumerate(views) if vp.contains(p))
                if seen != vis[f.id]:
                    bad.append(f"face {f.id}: sample {p} sees {sorted(seen)}, "
                               f"face sees {sorted(vis[f.id])}")
                    break

    for kind, sol in (("vg", vg), ("eg", eg)):
        cov = verify_coverage(P, d, sol.guards, kind, samples=samples, seed=seed)
        if not cov:
            bad.append(f"{kind}: greedy guards leave regions {cov.uncovered_regions} "
                       f"and {len(cov.uncovered_samples)} samples uncovered")

    if oracle:
        rep.vg_opt = _optimum(exact_min_vertex_guards, P, cap, d)
        rep.vg_opt_sinks = _optimum(exact_min_vertex_guards, P, cap, d, S.sinks)
        rep.eg_opt = _optimum(exact_min_edge_guards, P, cap, d)
        rep.eg_opt_sinks = _optimum(exact_min_edge_guards, P, cap, d, S.sinks)
        for kind, full, sinks, greedy in (("vg", rep.vg_opt, rep.vg_opt_sinks, vg.guards),
                                          ("eg", rep.eg_opt, rep.eg_opt_sinks, eg.guards)):
            if full is not None and sinks is not None and full != sinks:
                bad.append(f"{kind}: optimum over sinks {sinks} != over all regions {full}")
            if full is not None:
                if len(greedy) < full:
                    bad.append(f"{kind}: greedy {len(greedy)} beats optimum {full}")
                if len(greedy) > ratio_bound(S.m) * full:
                    bad.append(f"{kind}: greedy {len(greedy)} exceeds (ln m + 1) * {full}")
    return rep


def suite_polygons(seed: int, count: int, max_n: int, min_n: int = 6):
    """``count`` seeded random polygons with n drawn from [min_n, max_n]."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        sub = int(rng.integers(0, 2**63))
        out.append((f"random-{i}-n{n}", random_simple(n, sub)))
    return out


def run_suite(seed: int, count: int, max_n: int, min_n: int = 6, **kw) -> list:
    return [check_instance(P, label, seed=seed, **kw)
            for label, P in suite_polygons(seed, count, max_n, min_n)]
