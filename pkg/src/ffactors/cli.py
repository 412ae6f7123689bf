"""Command-line interface.

Subcommands: solve, audit, invariants, verify-theorem, gen, fuzz, recheck.
Exit codes follow a fixed contract: 0 success (solve: factor found; fuzz:
no discrepancy; recheck: all certificates verify), 1 negative outcome
(solve: no factor; fuzz: discrepancy; recheck: mismatch), 2 usage or
runtime error.

Size caps for the exponential routines default from environment variables
FFACTORS_AUDIT_MAX_N, FFACTORS_TOUGHNESS_MAX_N, and FFACTORS_ORACLE_MAX_M,
and are overridden by the corresponding flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import constructions, instances, invariants, reports, solver, theorems, tutte


def _env_cap(name: str, default: int) -> int:
    value = os.environ.get(name)
    return default if value is None else int(value)


def _read_instance(path: str):
    text = sys.stdin.read() if path == "-" else open(path).read()
    return instances.parse_instance(text)


def _emit(doc: dict, out: str | None) -> None:
    text = reports.dumps_report(doc)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_solve(args) -> int:
    started = time.monotonic()
    g, f = _read_instance(args.instance)
    factor = solver.find_f_factor(g, f)
    verdicts = {"factor_exists": factor is not None}
    certs = [] if factor is None else [reports.factor_certificate(factor)]
    doc = reports.build_report(
        "solve", {}, None, (g, f), verdicts, certs, started
    )
    _emit(doc, args.out)
    return 0 if factor is not None else 1


def _cmd_audit(args) -> int:
    started = time.monotonic()
    g, f = _read_instance(args.instance)
    mode = "exact" if g.n <= args.exact_max_n else "heuristic"
    found = tutte.find_violating_pair(
        g, f, exact_max_n=args.exact_max_n, mode=mode, seed=args.seed
    )
    verdicts = {
        "mode": mode,
        "violating_pair_found": found is not None,
    }
    if found is None:
        verdicts["conclusion"] = (
            "no violating pair exists" if mode == "exact"
            else "none found (heuristic)"
        )
        certs = []
    else:
        verdicts["conclusion"] = "f-factor does not exist"
        certs = [reports.violating_pair_certificate(found)]
    doc = reports.build_report(
        "audit", {"exact_max_n": args.exact_max_n}, args.seed,
        (g, f), verdicts, certs, started,
    )
    _emit(doc, args.out)
    return 0


def _cmd_invariants(args) -> int:
    started = time.monotonic()
    g, f = _read_instance(args.instance)
    cap = args.toughness_max_n
    if args.force:
        cap = max(cap, g.n)
    verdicts: dict = {"n": g.n, "m": g.m}
    if args.alpha:
        alpha, witness = invariants.stability_number(g)
        verdicts["alpha"] = alpha
        verdicts["alpha_witness"] = list(witness)
    if args.kappa:
        verdicts["kappa"] = invariants.vertex_connectivity(g)
    if args.toughness:
        value = invariants.toughness(g, max_n=cap)
        verdicts["toughness"] = str(value)
        verdicts["toughness_witness"] = (
            None if value.witness is None else list(value.witness)
        )
    if args.odd_toughness:
        value = invariants.odd_toughness(g, f, max_n=cap)
        verdicts["odd_toughness"] = str(value)
        verdicts["odd_toughness_witness"] = (
            None if value.witness is None else list(value.witness)
        )
    doc = reports.build_report(
        "invariants", {"toughness_max_n": cap}, None, (g, f),
        verdicts, [], started,
    )
    _emit(doc, args.out)
    return 0


def _cmd_verify_theorem(args) -> int:
    started = time.monotonic()
    g, f = _read_instance(args.instance)
    name = args.name
    if name == "main":
        report = theorems.check_main_theorem(g, f, args.a, args.b, confirm=args.confirm)
    elif name == "kappa_corollary":
        report = theorems.check_corollary_kappa(g, f, args.a, args.b, confirm=args.confirm)
    elif name == "min_degree":
        report = theorems.check_theorem_min_degree(g, f, args.a, args.b, confirm=args.confirm)
    elif name == "regular_connectivity":
        report = theorems.check_theorem_regular_connectivity(g, args.r, confirm=args.confirm)
    elif name == "ab_factor":
        report = theorems.check_theorem_ab_factor(g, args.a, args.b, confirm=args.confirm)
    elif name == "claw_free":
        report = theorems.check_theorem_claw_free(
            g, f, args.a, args.b, args.star_order, confirm=args.confirm
        )
    elif name == "stability_conjecture":
        report = theorems.check_stability_conjecture(g, f, args.a, args.b, confirm=args.confirm)
    else:
        raise ValueError(f"unknown theorem id {name!r}")
    certs = []
    if report.factor is not None:
        certs.append(reports.factor_certificate(report.factor))
    doc = reports.build_report(
        "verify-theorem",
        {"name": name, "a": args.a, "b": args.b, "r": args.r,
         "star_order": args.star_order, "confirm": args.confirm},
        None, (g, f), report.to_dict(), certs, started,
    )
    _emit(doc, args.out)
    return 0


def _cmd_gen(args) -> int:
    if args.family == "g0":
        built = constructions.build_g0(args.a, args.b, args.k, args.delta, args.p)
        g, f = built.graph, built.spec
        report_dict = built.to_dict()
    elif args.family == "g1":
        built = constructions.build_g1(args.a, args.b, args.r, args.delta, args.alpha)
        g, f = built.graph, built.spec
        report_dict = built.to_dict()
    else:  # random
        g = instances.random_connected_graph(args.n, args.p_edge, args.seed)
        f = instances.random_degree_spec(g, args.a, args.b, args.seed + 1)
        report_dict = {"family": "random", "n": args.n, "p_edge": args.p_edge,
                       "seed": args.seed}
    text = instances.serialize_instance(g, f)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.report:
        doc = reports.build_report(
            "gen", report_dict, getattr(args, "seed", None), (g, f),
            {"generated": True}, [], None,
        )
        with open(args.report, "w") as fh:
            fh.write(reports.dumps_report(doc))
    return 0


def _cmd_fuzz(args) -> int:
    started = time.monotonic()
    campaign = theorems.empirical_validate(
        args.theorem, args.trials, args.seed,
        n_range=(args.min_n, args.max_n),
    )
    doc = reports.build_report(
        "fuzz",
        {"theorem": args.theorem, "trials": args.trials,
         "min_n": args.min_n, "max_n": args.max_n},
        args.seed, None, campaign.to_dict(), [], started,
    )
    _emit(doc, args.out)
    return 1 if campaign.discrepancies else 0


def _cmd_recheck(args) -> int:
    with open(args.report) as fh:
        doc = json.load(fh)
    failures = reports.recheck_report(doc)
    for failure in failures:
        print(f"FAIL: {failure}", file=sys.stderr)
    if not failures:
        print("all certificates verified")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    audit_cap = _env_cap("FFACTORS_AUDIT_MAX_N", tutte.AUDIT_EXACT_MAX_N)
    tough_cap = _env_cap("FFACTORS_TOUGHNESS_MAX_N", invariants.TOUGHNESS_MAX_N)

    parser = argparse.ArgumentParser(
        prog="ffactors",
        description="f-factor existence: solving, certifying, and auditing "
                    "sufficient conditions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find an f-factor; exit 0 found, 1 none")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--out", help="write the report to a file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("audit", help="search for a violating pair certificate")
    p.add_argument("instance")
    p.add_argument("--exact-max-n", type=int, default=audit_cap,
                   help=f"exact 3^n enumeration cap (default {audit_cap}; "
                        "larger graphs use the heuristic search)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("invariants", help="compute exact graph parameters")
    p.add_argument("instance")
    p.add_argument("--alpha", action="store_true")
    p.add_argument("--kappa", action="store_true")
    p.add_argument("--toughness", action="store_true")
    p.add_argument("--odd-toughness", action="store_true")
    p.add_argument("--toughness-max-n", type=int, default=tough_cap,
                   help=f"subset enumeration cap (default {tough_cap})")
    p.add_argument("--force", action="store_true",
                   help="lift the enumeration cap to the instance size")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("verify-theorem", help="run a hypothesis checker")
    p.add_argument("name", choices=theorems.THEOREM_IDS)
    p.add_argument("instance")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--star-order", type=int, default=3)
    p.add_argument("--confirm", action="store_true",
                   help="run the solver when all hypotheses hold")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("gen", help="emit an instance file")
    p.add_argument("family", choices=("g0", "g1", "random"))
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=3)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--delta", type=int, default=12)
    p.add_argument("--p", dest="p", type=int, default=4)
    p.add_argument("--alpha", type=int, default=2)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p-edge", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="instance file destination (default stdout)")
    p.add_argument("--report", help="also write a construction report here")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("fuzz", help="empirical validation campaign; "
                                    "nonzero exit on any discrepancy")
    p.add_argument("theorem", choices=theorems.THEOREM_IDS)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-n", type=int, default=8)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("recheck", help="re-verify every certificate in a report")
    p.add_argument("report")
    p.set_defaults(func=_cmd_recheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
