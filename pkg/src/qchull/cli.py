"""Command-line front end: ``qchull factor|analyze|lcp|search|reproduce``.

Exit codes: 0 success, 2 invalid input, 3 distance budget exceeded,
4 closed-form formula and rank oracle disagree.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .code import (
    DEFAULT_BUDGET,
    DistanceBudgetExceeded,
    dual,
    hermitian_hull_dim_oracle,
    hull_dim_oracle,
    is_lcp_oracle,
    min_distance,
)
from .fc import FourCirculantSpec, fc_build_code, fc_hull_dim_formula, fc_hull_poly, fc_lcp
from .gf import parse_field
from .poly import factor_xm_minus_1
from .qc import (
    DcSpec,
    QcOneGenSpec,
    qc_build_code,
    qc_generator_poly,
    qc_hull_dim_formula,
    qc_hull_poly,
    qc_lcp_maximal_2qc,
    qc_parity_check_poly,
)
from .search import FAMILIES, SearchTask, reproduce_table, run_search

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_DISAGREE = 4

log = logging.getLogger("qchull")


def _gens(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",")]
    if not all(parts):
        raise ValueError(f"empty polynomial in {text!r}")
    return parts


def _build_spec(family: str, field, m: int, gens: list[str]):
    if family == "qc1gen":
        return QcOneGenSpec.parse(field, m, gens)
    if family == "dc":
        if len(gens) != 1:
            raise ValueError("a double circulant code takes exactly one polynomial a(x)")
        return DcSpec.parse(field, m, gens[0])
    if family == "qc2max":
        if len(gens) != 2:
            raise ValueError("a 2-QC code takes exactly two polynomials a1(x),a2(x)")
        return QcOneGenSpec.parse(field, m, gens)
    if family == "fc":
        if len(gens) != 2:
            raise ValueError("a four-circulant code takes exactly two polynomials a1(x),a2(x)")
        return FourCirculantSpec.parse(field, m, gens[0], gens[1])
    raise ValueError(f"unknown family {family!r}")


def _build(spec):
    return fc_build_code(spec) if isinstance(spec, FourCirculantSpec) else qc_build_code(spec)


def _emit(args, report: dict, text_lines: list[str] | None = None) -> None:
    if args.format == "json":
        print(json.dumps(report))
    else:
        for line in text_lines if text_lines is not None else [f"{k}: {v}" for k, v in report.items()]:
            print(line)


# --- subcommands ---------------------------------------------------------------------


def cmd_factor(args) -> int:
    field = parse_field(args.q)
    fc = factor_xm_minus_1(args.m, field)
    report = fc.as_dict()
    lines = [f"x^{args.m}-1 over GF({field.q}) = " + "".join(f"({f})" for f in fc.factors())]
    lines += [f"self-reciprocal: {f}" for f in report["self_reciprocal"]]
    lines += [f"reciprocal pair: {h}, {hs}" for h, hs in report["reciprocal_pairs"]]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_analyze(args) -> int:
    field = parse_field(args.q)
    spec = _build_spec(args.family, field, args.m, _gens(args.gen))
    C = _build(spec)
    report: dict = {"spec": spec.to_dict(), "n": C.n, "k": C.k}
    if isinstance(spec, FourCirculantSpec):
        report["hull_poly"] = str(fc_hull_poly(spec))
        formula = fc_hull_dim_formula(spec)
    else:
        report["g"] = str(qc_generator_poly(spec))
        report["h"] = str(qc_parity_check_poly(spec))
        report["hull_poly"] = str(qc_hull_poly(spec))
        formula = qc_hull_dim_formula(spec)
    oracle = hull_dim_oracle(C)
    report.update(hull_formula=formula, hull_oracle=oracle, agree=formula == oracle, lcd=formula == 0)
    if field.is_square:
        report["hermitian_hull_oracle"] = hermitian_hull_dim_oracle(C)
    status = EXIT_OK
    if C.k == 0:
        report["d"] = None
    else:
        try:
            report["d"] = min_distance(C, args.budget)
        except DistanceBudgetExceeded as exc:
            report.update(d=None, d_bounds=[exc.lower_bound, exc.upper_bound], status="budget exceeded")
            status = EXIT_BUDGET
    if formula != oracle:
        status = EXIT_DISAGREE
    _emit(args, report)
    return status


def cmd_lcp(args) -> int:
    field = parse_field(args.q)
    fam = args.family
    C_spec = _build_spec(fam, field, args.m, _gens(args.genC))
    D_spec = _build_spec(fam, field, args.m, _gens(args.genD))
    formula = fc_lcp(C_spec, D_spec) if fam == "fc" else qc_lcp_maximal_2qc(C_spec, D_spec)
    C, D = _build(C_spec), _build(D_spec)
    oracle = is_lcp_oracle(C, D)
    report: dict = {
        "C": C_spec.to_dict(),
        "D": D_spec.to_dict(),
        "n": C.n,
        "k_C": C.k,
        "k_D": D.k,
        "lcp_formula": formula,
        "lcp_oracle": oracle,
        "agree": formula == oracle,
    }
    status = EXIT_OK
    if formula and oracle:
        try:
            report["security_parameter"] = min(min_distance(C, args.budget), min_distance(dual(D), args.budget))
        except DistanceBudgetExceeded as exc:
            report.update(security_parameter=None, status="budget exceeded", d_bounds=[exc.lower_bound, exc.upper_bound])
            status = EXIT_BUDGET
    if formula != oracle:
        status = EXIT_DISAGREE
    _emit(args, report)
    return status


def cmd_search(args) -> int:
    field = parse_field(args.q)
    mode = "random" if args.trials is not None else "exhaustive"
    task = SearchTask(
        family=args.task,
        field=field,
        m=args.m,
        mode=mode,
        trials=args.trials,
        seed=args.seed,
        distance_budget=args.budget,
        strategy=args.strategy,
    )
    result = run_search(task, workers=args.workers)
    _emit(args, result.as_dict())
    if result.status == "budget-exceeded":
        return EXIT_BUDGET
    if result.witness and not result.verified:
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_reproduce(args) -> int:
    ids = range(1, 9) if args.table == "all" else [args.table]
    status = EXIT_OK
    for tid in ids:
        for row in reproduce_table(tid, args.budget):
            if row["status"] == "DISAGREE":
                status = EXIT_DISAGREE
            if args.format == "json":
                print(json.dumps(row))
            else:
                extra = "; ".join(row.get("problems", [])) or row.get("reason", "")
                if "skipped_checks" in row:
                    got = f"[{row['n']},{row['k']}] shape only"
                else:
                    got = f"d={row.get('d')} listed={row['d_listed']}"
                print(f"table {row['table']} m={row['m']:<3} {row['status']:<8} {got} {extra}".rstrip())
    return status


# --- parser --------------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qchull", description="Hulls, LCD and LCP tests for QC, DC and FC codes.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_m: bool = True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="max codewords enumerated per distance")
        if with_m:
            p.add_argument("--q", required=True, help="field, e.g. 4 or 4:modulus=x^2+x+1")
            p.add_argument("--m", type=_positive, required=True, help="co-index")

    p = sub.add_parser("factor", help="factor x^m-1 and classify the factors")
    common(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("analyze", help="hull dimension, LCD verdict and minimum distance of one code")
    common(p)
    p.add_argument("--family", choices=("qc1gen", "dc", "fc"), required=True)
    p.add_argument("--gen", required=True, help="comma-separated polynomials")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lcp", help="decide whether a pair of codes is LCP")
    common(p)
    p.add_argument("--family", choices=("dc", "qc2max", "fc"), required=True)
    p.add_argument("--genC", required=True)
    p.add_argument("--genD", required=True)
    p.set_defaults(func=cmd_lcp)

    p = sub.add_parser("search", help="search for the best code of a family")
    common(p)
    p.add_argument("--task", "--family", dest="task", choices=FAMILIES, required=True)
    p.add_argument("--trials", type=_positive, help="random mode: number of candidates (needs --seed)")
    p.add_argument("--seed", type=int)
    p.add_argument("--strategy", choices=("negated-conjugate", "pairs"), default="negated-conjugate")
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce", help="re-check the rows of a reference table")
    common(p, with_m=False)
    p.add_argument("--table", required=True, type=lambda s: s if s == "all" else int(s),
                   choices=["all", *range(1, 9)])
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.command == "search" and args.trials is not None and args.seed is None:
        print("error: random search (--trials) needs --seed", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except DistanceBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
