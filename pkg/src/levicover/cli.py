"""Command-line entry points.

JSON goes to stdout, human-readable summaries to stderr, so output can be
piped into tooling without scraping prose. Exit codes are a stable
contract: 0 pass, 1 check failed, 2 usage or precondition error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import datetime
import json
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import covering, levi
from .graphs import (Graph, GraphError, degeneracy_order, graph_hash,
                     is_c4_free, members, parse_graph,
                     sqrt_degeneracy_bound, vset, write_graph)
from .independence import (BudgetExceededError, DesignParams,
                           check_cover_capacity, check_expansion,
                           count_balanced, enumerate_maximal_independent_sets,
                           evaluate_bounds, max_side_product)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CHECK_NAMES = ("levi-props", "c4free", "degeneracy", "expansion", "product",
               "balanced", "coverbound")


def _emit_json(doc: dict):
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _summary(msg: str):
    print(msg, file=sys.stderr)


def _load_graph(args) -> Graph:
    if getattr(args, "infile", None):
        return parse_graph(Path(args.infile).read_bytes())
    return levi.gen_levi(args.q)


def _infer_q(g: Graph) -> int:
    """Recover the plane order from the bipartition side size."""
    s = g.side_p_size
    q = math.isqrt(s)
    while q * q + q + 1 > s:
        q -= 1
    if q < 2 or q * q + q + 1 != s or not levi.is_prime(q):
        raise GraphError(
            f"side size {s} does not match a prime-order plane")
    return q


def _check(name, expected, observed, passed, margin=None) -> dict:
    return {"name": name, "expected": expected, "observed": observed,
            "margin": margin, "pass": bool(passed)}


def _run_report(command: str, parameters: dict, checks: list[dict],
                started: float, no_timestamp: bool) -> dict:
    doc = {
        "command": command,
        "parameters": parameters,
        "outcome": "pass" if all(c["pass"] for c in checks) else "fail",
        "checks": checks,
    }
    if not no_timestamp:
        doc["duration_s"] = time.monotonic() - started
        doc["timestamp"] = datetime.datetime.now(
            datetime.timezone.utc).isoformat()
    return doc


def cmd_gen(args) -> int:
    g = levi.gen_levi(args.q)
    text = write_graph(g)
    summary = f"{g.n} {g.m} {g.side_p_size}"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(summary)
    else:
        sys.stdout.write(text)
        _summary(summary)
    return EXIT_PASS


def _expansion_check(g: Graph, q: int, samples: int, seed: int) -> dict:
    params = DesignParams.for_plane(q)
    rng = np.random.default_rng(seed)
    violations = 0
    total = 0
    for side in (g.side_p, g.side_l):
        verts = members(side)
        for v in verts:
            total += 1
            if not check_expansion(g, params, 1 << v).holds:
                violations += 1
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                total += 1
                if not check_expansion(g, params, (1 << u) | (1 << v)).holds:
                    violations += 1
    for _ in range(samples):
        verts = members(g.side_p if rng.integers(2) == 0 else g.side_l)
        size = int(rng.integers(1, len(verts) + 1))
        s = vset(rng.choice(verts, size=size, replace=False))
        total += 1
        if not check_expansion(g, params, s).holds:
            violations += 1
    return _check("expansion", 0, violations, violations == 0,
                  margin=float(total - violations))


def cmd_verify(args) -> int:
    started = time.monotonic()
    names = args.checks.split(",")
    for name in names:
        if name not in CHECK_NAMES:
            raise GraphError(f"unknown check name: {name}")
    g = _load_graph(args)
    checks = []
    for name in names:
        if name == "levi-props":
            q = args.q if args.q else _infer_q(g)
            rep = levi.verify_levi_properties(g, q)
            checks.append(_check("levi-props", True, rep.all_ok, rep.all_ok))
        elif name == "c4free":
            ok = is_c4_free(g)
            checks.append(_check("c4free", True, ok, ok))
        elif name == "degeneracy":
            d = degeneracy_order(g).degeneracy
            bound = sqrt_degeneracy_bound(g.n)
            checks.append(_check("degeneracy", bound, d, d <= bound,
                                 margin=float(bound - d)))
        elif name == "expansion":
            q = args.q if args.q else _infer_q(g)
            checks.append(_expansion_check(g, q, args.samples, args.seed))
        elif name == "product":
            q = args.q if args.q else _infer_q(g)
            bound = q * (q + 1) ** 2
            best, _prof = max_side_product(g)
            checks.append(_check("product", bound, best, best <= bound,
                                 margin=float(bound - best)))
        elif name == "balanced":
            count = count_balanced(g, args.k, budget=args.budget)
            bound = Fraction(g.n, 4 * args.k) ** args.k
            checks.append(_check("balanced", float(bound), count,
                                 count >= bound,
                                 margin=float(count - bound)))
        elif name == "coverbound":
            bound = 2 ** (args.k / 2) * g.n ** (3 * args.k / 4)
            worst = 0
            for s in enumerate_maximal_independent_sets(g):
                worst = max(worst, check_cover_capacity(g, s, args.k))
            checks.append(_check("coverbound", bound, worst, worst <= bound,
                                 margin=float(bound - worst)))
    doc = _run_report("verify", {"q": args.q, "in": args.infile,
                                 "checks": args.checks, "k": args.k},
                      checks, started, args.no_timestamp)
    _emit_json(doc)
    _summary(f"verify: {doc['outcome']} "
             f"({sum(c['pass'] for c in checks)}/{len(checks)} checks ok)")
    return EXIT_PASS if doc["outcome"] == "pass" else EXIT_FAIL


def cmd_bounds(args) -> int:
    g = levi.gen_levi(args.q) if args.exact else None
    rep = evaluate_bounds(args.q, args.k, g=g, budget=args.budget)
    frac = rep.balanced_count_lower_bound
    doc = {
        "q": rep.q, "k": rep.k, "n": rep.n,
        "balanced_count_lower_bound":
            f"{frac.numerator}/{frac.denominator}",
        "balanced_count_lower_bound_float": float(frac),
        "per_set_capacity_bound": rep.per_set_capacity_bound,
        "family_size_lower_bound": rep.family_size_lower_bound,
        "measured_balanced_count": rep.measured_balanced_count,
        "measured_max_capacity": rep.measured_max_capacity,
        "exact_cover_lower_bound": rep.exact_cover_lower_bound,
    }
    _emit_json(doc)
    _summary(f"bounds: q={rep.q} k={rep.k} n={rep.n} "
             f"family_size_lower_bound={rep.family_size_lower_bound:.6g}")
    return EXIT_PASS


def cmd_cover_build(args) -> int:
    g = parse_graph(Path(args.infile).read_bytes())
    fam = covering.build_family_mc(g, args.k, args.delta, args.seed,
                                   budget=args.budget)
    text = covering.dump_family(fam)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    _summary(f"cover build: {len(fam.sets)} distinct sets from t={fam.t} "
             f"samples (d={fam.degeneracy}, p={fam.p})")
    return EXIT_PASS


def cmd_cover_verify(args) -> int:
    started = time.monotonic()
    g = parse_graph(Path(args.infile).read_bytes())
    fam = covering.load_family(Path(args.family).read_text(encoding="utf-8"))
    if fam.graph_hash != graph_hash(g):
        raise GraphError("family file was built for a different graph "
                         f"(hash {fam.graph_hash[:12]}...)")
    ok, witness = covering.verify_family(g, args.k, fam.sets,
                                         budget=args.budget)
    checks = [_check("coverage", True, ok, ok)]
    doc = _run_report("cover-verify",
                      {"in": args.infile, "family": args.family,
                       "k": args.k}, checks, started, args.no_timestamp)
    if witness is not None:
        doc["parameters"]["witness"] = members(witness)
    _emit_json(doc)
    _summary("cover verify: " + ("covered" if ok
                                 else f"uncovered witness {members(witness)}"))
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_cover_greedy(args) -> int:
    g = parse_graph(Path(args.infile).read_bytes())
    sets = covering.greedy_cover(g, args.k, budget=args.budget)
    d = degeneracy_order(g).degeneracy
    fam = covering.CoveringFamily(
        sets=tuple(sets), k=args.k, delta=0.0, seed=0, t=len(sets),
        degeneracy=d, p=Fraction(1, d + 1), graph_hash=graph_hash(g))
    text = covering.dump_family(fam)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    _summary(f"cover greedy: {len(sets)} sets")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="levicover",
        description="Projective-plane incidence graphs and independence "
                    "covering families.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an incidence graph")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run structural checks")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--q", type=int)
    src.add_argument("--in", dest="infile")
    p.add_argument("--checks", required=True,
                   help="comma list from: " + ",".join(CHECK_NAMES))
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=covering.DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="evaluate the covering bound chain")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--budget", type=int, default=covering.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cover", help="covering family commands")
    csub = p.add_subparsers(dest="cover_command", required=True)

    c = csub.add_parser("build")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--delta", type=float, required=True)
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--out")
    c.add_argument("--budget", type=int, default=covering.DEFAULT_BUDGET)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_cover_build)

    c = csub.add_parser("verify")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--family", required=True)
    c.add_argument("--budget", type=int, default=covering.DEFAULT_BUDGET)
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--no-timestamp", action="store_true")
    c.set_defaults(func=cmd_cover_verify)

    c = csub.add_parser("greedy")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--out")
    c.add_argument("--budget", type=int, default=covering.DEFAULT_BUDGET)
    c.set_defaults(func=cmd_cover_greedy)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        _summary(f"error: {exc}")
        return EXIT_BUDGET
    except (GraphError, OSError, json.JSONDecodeError, KeyError) as exc:
        _summary(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
