"""Command-line front end.

::

    artgallery vg L.poly [--svg out.svg] [--oracle] [--timings]
    artgallery eg L.poly
    artgallery regions L.poly
    artgallery oracle comb3.poly --kind vg [--cap 8] [--sinks-only]
    artgallery render L.poly --out L.svg [--guards vg|eg] [--labels]
    artgallery suite --seed 0 --count 20 --max-n 12

Every command prints JSON.  Exit status: 0 on success, 1 for unreadable or
invalid input, 2 when an internal invariant fails, 3 when an oracle hits
its cap.  ``ARTGALLERY_ORACLE_CAP`` sets the default cap.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import GeometryError, InvariantViolation, OracleCapExceeded, ParseError
from .geometry import SimplePolygon
from .oracle import DEFAULT_CAP, exact_min_edge_guards, exact_min_vertex_guards
from .pipeline import GuardSolution, analyze, solve_eg, solve_vg, stats
from .polyfile import digest, format_number, read_poly
from .render import render_svg

__all__ = ["main", "result_document", "default_cap"]

EXIT_INPUT, EXIT_INVARIANT, EXIT_CAP = 1, 2, 3


def default_cap() -> int:
    raw = os.environ.get("ARTGALLERY_ORACLE_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise SystemExit(f"ARTGALLERY_ORACLE_CAP must be an integer, got {raw!r}")
    return cap


def _pt(p):
    return [format_number(p.x), format_number(p.y)]


def result_document(P: SimplePolygon, sol: GuardSolution, optimum: int | None = None,
                    timings: bool = False) -> dict:
    """The JSON-ready result of a vg/eg run.

    Timings are left out unless asked for, which keeps repeated runs
    byte-identical.
    """
    kind = sol.kind.value
    if kind == "vg":
        where = [_pt(P.vertices[g]) for g in sol.guards]
    else:
        where = [[_pt(P.edges[g].a), _pt(P.edges[g].b)] for g in sol.guards]
    doc = {
        "kind": kind,
        "input_digest": digest(P),
        "n": P.n,
        "guards": list(sol.guards),
        "guard_coordinates": where,
        "m": sol.sink_count,
        "r": sol.region_count,
        "windows": sol.window_count,
        "greedy_order": list(sol.cover_order),
        "repaired_regions": list(sol.repaired_regions),
        "oracle_optimum": optimum,
    }
    if timings:
        doc["timings"] = {k: round(v, 6) for k, v in sorted(sol.timings.items())}
    return doc


def _emit(doc):
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _oracle_fn(kind):
    return exact_min_vertex_guards if kind == "vg" else exact_min_edge_guards


def cmd_solve(args):
    P = read_poly(args.file)
    A = analyze(P)
    sol = (solve_vg if args.command == "vg" else solve_eg)(P, A)
    optimum = None
    if args.oracle:
        optimum = len(_oracle_fn(args.command)(P, cap=args.cap, decomp=A.decomposition))
    _emit(result_document(P, sol, optimum, args.timings))
    if args.svg:
        Path(args.svg).write_text(render_svg(A.decomposition, A.dual, A.sinks, sol),
                                  encoding="utf-8")


def cmd_regions(args):
    P = read_poly(args.file)
    A = analyze(P)
    st = stats(P, A)
    doc = {
        "input_digest": digest(P),
        "n": st.n,
        "windows": st.window_count,
        "r": st.r,
        "m": st.m,
        "sinks": list(A.sinks.sinks),
        "incomparable_edges": st.incomparable_edge_count,
        "promoted_sinks": st.promoted_sinks,
        "window_crossings": st.window_crossings,
    }
    if args.timings:
        doc["timings"] = {k: round(v, 6) for k, v in sorted(st.timings.items())}
    _emit(doc)


def cmd_oracle(args):
    P = read_poly(args.file)
    A = analyze(P)
    regions = A.sinks.sinks if args.sinks_only else None
    guards = _oracle_fn(args.kind)(P, cap=args.cap, decomp=A.decomposition, regions=regions)
    _emit({
        "kind": args.kind,
        "input_digest": digest(P),
        "scope": "sinks" if args.sinks_only else "regions",
        "optimum": len(guards),
        "guards": guards,
    })


def cmd_render(args):
    P = read_poly(args.file)
    A = analyze(P)
    sol = None
    if args.guards == "vg":
        sol = solve_vg(P, A)
    elif args.guards == "eg":
        sol = solve_eg(P, A)
    Path(args.out).write_text(render_svg(A.decomposition, A.dual, A.sinks, sol, args.labels),
                              encoding="utf-8")


def cmd_suite(args):
    from .suite import run_suite

    reports = run_suite(args.seed, args.count, args.max_n, args.min_n, cap=args.cap,
                        samples=args.samples, oracle=not args.no_oracle)
    failed = [r.label for r in reports if r.violations]
    _emit({
        "seed": args.seed,
        "count": args.count,
        "min_n": args.min_n,
        "max_n": args.max_n,
        "failures": failed,
        "instances": [r.to_dict() for r in reports],
    })
    if failed:
        raise InvariantViolation(f"{len(failed)} instance(s) violated an invariant")


class _Parser(argparse.ArgumentParser):
    # usage mistakes are bad input; keep 2 for invariant failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    cap = default_cap()
    p = _Parser(prog="artgallery",
                                description="Vertex and edge guards via visibility-region sinks.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, what in (("vg", "vertex"), ("eg", "edge")):
        s = sub.add_parser(name, help=f"approximate minimum {what} guards")
        s.add_argument("file")
        s.add_argument("--svg", metavar="PATH", help="also render the solution")
        s.add_argument("--oracle", action="store_true", help="include the exact optimum")
        s.add_argument("--cap", type=int, default=cap)
        s.add_argument("--timings", action="store_true", help="include per-stage wall time")
        s.set_defaults(func=cmd_solve)

    s = sub.add_parser("regions", help="decomposition statistics")
    s.add_argument("file")
    s.add_argument("--timings", action="store_true")
    s.set_defaults(func=cmd_regions)

    s = sub.add_parser("oracle", help="exact optimum by enumeration")
    s.add_argument("file")
    s.add_argument("--kind", choices=("vg", "eg"), required=True)
    s.add_argument("--cap", type=int, default=cap)
    s.add_argument("--sinks-only", action="store_true",
                   help="require coverage of sink regions only")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("render", help="draw the decomposition as SVG")
    s.add_argument("file")
    s.add_argument("--out", required=True)
    s.add_argument("--guards", choices=("none", "vg", "eg"), default="none")
    s.add_argument("--labels", action="store_true")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("suite", help="randomized invariant suite")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--min-n", type=int, default=6)
    s.add_argument("--cap", type=int, default=cap)
    s.add_argument("--samples", type=int, default=1000,
                   help="random interior points per coverage check")
    s.add_argument("--no-oracle", action="store_true")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ParseError, GeometryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except AssertionError as exc:
        # InvariantViolation and internal consistency asserts
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return 0


if __name__ == "__main__":
    sys.exit(main())
