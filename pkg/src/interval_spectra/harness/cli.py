"""Command line interface.

Every command prints one JSON document on stdout. Exit codes: 0 success,
1 failed oracle check (``verify``), 2 invalid input, 3 dimension cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from ..bands import BandSet
from ..errors import DimensionCapError, ValidationError
from ..intervals import IntervalMatrix, Side, SymmetricIntervalMatrix
from ..outer import outer_bounds, tighten_outer
from ..submatrix import Mode
from ..vertex import DEFAULT_VERTEX_CAP, vertex_enum_bounds
from .bench import format_table, run_benchmark
from .driver import METHODS, default_outer, inner_bands, singular_bounds
from .oracle import monte_carlo_inner
from .problem import bands_to_dict, load_bands, load_problem

SIDES = {"upper": (Side.UPPER,), "lower": (Side.LOWER,), "both": (Side.UPPER, Side.LOWER)}


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _symmetric(problem) -> SymmetricIntervalMatrix:
    a = problem.matrix()
    if not isinstance(a, SymmetricIntervalMatrix):
        raise ValidationError("this command needs a symmetric problem; use 'singular' for rectangular ones")
    return a


def _band_doc(bands: BandSet, witnesses: bool) -> dict:
    doc = bands_to_dict(bands)
    if witnesses:
        doc["witness_lo"] = None if bands.witness_lo is None else [np.asarray(w).tolist() for w in bands.witness_lo]
        doc["witness_hi"] = None if bands.witness_hi is None else [np.asarray(w).tolist() for w in bands.witness_hi]
    return doc


def _outer_for(args, problem):
    if args.outer:
        return load_bands(args.outer)
    if problem.outer is not None:
        return problem.outer
    return None


def cmd_inner(args) -> dict:
    problem = load_problem(args.file)
    a = _symmetric(problem)
    mode = Mode(args.mode)
    outer = _outer_for(args, problem)
    if args.method == "submatrix" and outer is None:
        outer = default_outer(a)
    indices = None
    if args.p is not None:
        if not 1 <= args.p <= a.n:
            raise ValidationError(f"--p must lie in 1..{a.n}")
        indices = [args.p - 1]
    t0 = time.perf_counter()
    bands, counters = inner_bands(a, args.method, outer, mode=mode, sides=SIDES[args.side],
                                  indices=indices, gaps_only=args.gaps_only, cap=args.cap)
    doc = {"command": "inner", "method": args.method, "n": a.n}
    if args.method == "submatrix":
        doc["mode"] = mode.value
    doc.update(_band_doc(bands, args.witnesses))
    if outer is not None:
        doc["outer"] = outer.pairs()
    doc["counters"] = counters
    doc["seconds"] = time.perf_counter() - t0
    return doc


def cmd_outer(args) -> dict:
    a = _symmetric(load_problem(args.file))
    outer = outer_bounds(a)
    if args.tighten:
        outer = tighten_outer(outer, vertex_enum_bounds(a, args.cap))
    return {"command": "outer", "n": a.n, "tightened": bool(args.tighten), "bands": outer.pairs()}


def cmd_singular(args) -> dict:
    problem = load_problem(args.file)
    a = problem.matrix()
    if isinstance(a, SymmetricIntervalMatrix):
        a = IntervalMatrix(a.mid, a.rad)
    outer = load_bands(args.outer) if args.outer else problem.outer
    t0 = time.perf_counter()
    bands, full_outer, counters = singular_bounds(a, args.method, outer, mode=Mode(args.mode), cap=args.cap)
    doc = {"command": "singular", "method": args.method, "shape": list(a.shape)}
    doc.update(_band_doc(bands, args.witnesses))
    if full_outer is not None:
        doc["outer"] = full_outer.head(len(bands)).pairs()
    doc["counters"] = counters
    doc["seconds"] = time.perf_counter() - t0
    return doc


def cmd_verify(args) -> dict:
    """Monte Carlo sandwich: oracle inside the outer bands, below certified-exact endpoints."""
    problem = load_problem(args.file)
    a = _symmetric(problem)
    vertex = vertex_enum_bounds(a, args.cap) if a.n <= args.cap else None
    outer = problem.outer if problem.outer is not None else default_outer(a, vertex=vertex)
    oracle = monte_carlo_inner(a, args.samples, args.seed, boundary_fraction=args.boundary_fraction)
    slack = 1e-9 * (1.0 + np.max(np.abs(outer.hi), initial=0.0))
    inside = oracle.within(outer, slack)
    exact_ok = True
    if vertex is not None:
        exact_ok = bool(oracle.hi[0] <= vertex.hi[0] + slack and oracle.lo[-1] >= vertex.lo[-1] - slack)
    doc = {"command": "verify", "n": a.n, "samples": args.samples, "seed": args.seed,
           "oracle": oracle.pairs(), "outer": outer.pairs(),
           "within_outer": bool(inside), "exact_endpoints_respected": exact_ok,
           "ok": bool(inside and exact_ok)}
    if vertex is not None:
        doc["vertex"] = vertex.pairs()
    return doc


def cmd_bench(args) -> dict:
    records = run_benchmark(args.n, args.radius, args.trials, args.seed, args.methods,
                            Mode(args.mode), m_list=args.m, vertex_cap=args.cap)
    if args.format == "table":
        print(format_table(records))
        return None
    return {"command": "bench", "records": [r.to_dict() for r in records]}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="interval-spectra",
                                     description="Inner and outer bounds on eigenvalue sets of symmetric interval matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inner", help="inner bands of a symmetric interval matrix")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.BRANCH_BOUND.value)
    p.add_argument("--outer", help="JSON file with outer bands [[lo, hi], ...]")
    p.add_argument("--gaps-only", action="store_true", help="search only bands separated from the previous one")
    p.add_argument("--side", choices=sorted(SIDES), default="both")
    p.add_argument("--p", type=int, help="search a single band (1-based)")
    p.add_argument("--cap", type=int, help="dimension cap for exponential methods")
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_inner)

    p = sub.add_parser("outer", help="baseline outer bands")
    p.add_argument("--tighten", action="store_true", help="replace extreme endpoints by vertex enumeration")
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("file")
    p.set_defaults(func=cmd_outer)

    p = sub.add_parser("singular", help="inner bands of singular value sets")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.BRANCH_BOUND.value)
    p.add_argument("--outer", help="JSON file with outer bands for the singular values")
    p.add_argument("--cap", type=int)
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("verify", help="Monte Carlo check of outer and exact bounds")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--boundary-fraction", type=float, default=0.5)
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="random-instance sharpness/time table")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--m", type=_int_list, help="row counts: benchmark singular values of m x n matrices")
    p.add_argument("--radius", type=_float_list, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--methods", type=_str_list, default=list(METHODS))
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.BRANCH_BOUND.value)
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = args.func(args)
    except DimensionCapError as exc:
        print(json.dumps({"error": str(exc), "kind": "cap"}), file=sys.stderr)
        return 3
    except (ValidationError, OSError) as exc:
        print(json.dumps({"error": str(exc), "kind": "validation"}), file=sys.stderr)
        return 2
    if doc is not None:
        print(json.dumps(doc))
    if args.command == "verify" and not doc["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
