"""How many regions, and how few sinks, as polygons grow.

Averages over a handful of random polygons per size; the sink count grows
much more slowly than the region count, which is what makes covering only
sinks worthwhile.
"""
import argparse
import statistics

import numpy as np

from artgallery import random_simple, stats


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 30, 40])
    ap.add_argument("--per-size", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    rows = []
    print(f"{'n':>4} {'|W|':>6} {'r':>6} {'m':>5} {'m/r':>6}")
    for n in args.sizes:
        runs = [stats(random_simple(n, int(rng.integers(2**32)))) for _ in range(args.per_size)]
        w = statistics.median(s.window_count for s in runs)
        r = statistics.median(s.r for s in runs)
        m = statistics.median(s.m for s in runs)
        rows.append((n, r, m))
        print(f"{n:>4} {w:>6} {r:>6} {m:>5} {m / r:>6.3f}")

    if len(rows) > 1:
        ns, rs, ms = map(np.log, zip(*rows))
        print(f"\nlog-log slope: r ~ n^{np.polyfit(ns, rs, 1)[0]:.2f}, "
              f"m ~ n^{np.polyfit(ns, ms, 1)[0]:.2f}")


if __name__ == "__main__":
    main()
