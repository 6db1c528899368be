"""Greedy against the exact optimum on the pinwheel combs.

Each tooth of ``comb(k)`` hides a tip region that only its own pocket sees,
so k guards are necessary.  For small k greedy finds them; at k = 5 the
hub regions tempt vertex greedy into one extra guard, well inside the
ln m + 1 factor.  Pass ``--max-k`` to go further (the exact search grows quickly).
"""
import argparse
import time

from artgallery import analyze, comb, solve_eg, solve_vg
from artgallery.errors import OracleCapExceeded
from artgallery.oracle import exact_min_edge_guards, exact_min_vertex_guards
from artgallery.suite import ratio_bound


def optimum(fn, P, d, cap):
    try:
        return len(fn(P, cap=cap, decomp=d))
    except OracleCapExceeded:
        return None


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=5)
    args = ap.parse_args(argv)

    print(f"{'k':>3} {'n':>4} {'r':>5} {'m':>4} {'vg':>4} {'opt':>4} {'eg':>4} {'opt':>4} "
          f"{'bound':>6} {'secs':>6}")
    for k in range(2, args.max_k + 1):
        t0 = time.perf_counter()
        P = comb(k)
        A = analyze(P)
        d = A.decomposition
        vg, eg = solve_vg(P, A), solve_eg(P, A)
        vo = optimum(exact_min_vertex_guards, P, d, k + 1)
        eo = optimum(exact_min_edge_guards, P, d, k + 1)
        print(f"{k:>3} {P.n:>4} {d.r:>5} {A.sinks.m:>4} {len(vg.guards):>4} {vo!s:>4} "
              f"{len(eg.guards):>4} {eo!s:>4} {ratio_bound(A.sinks.m):>6.2f} "
              f"{time.perf_counter() - t0:>6.1f}")


if __name__ == "__main__":
    main()
