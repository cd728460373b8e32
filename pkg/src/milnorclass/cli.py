"""Command-line front end.

Subcommands::

    compute --n N --f POLY [--seed S] [--classes LIST] [--json PATH]
    strata  --input STRAT.json [--against REPORT.json]
    check   --n N --f POLY [--seed S]

Exit codes: 0 ok, 2 bad input, 3 non-generic random sample, 4 mismatch.
Errors are printed to stderr as one line ``error: <code>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .charclass import (
    ClassReport,
    DegenerateInputError,
    HypersurfaceProblem,
    NonGenericSampleError,
    characteristic_classes,
    projective_degrees,
    total_tjurina_number,
)
from .chow import ChowClass
from .polyring import PolynomialSyntaxError
from .strata import (
    StratificationError,
    alpha,
    load_stratification,
    sectional_milnor_class,
    stratified_milnor_class,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GENERICITY = 3
EXIT_MISMATCH = 4

CLASS_NAMES = ("degrees", "segre", "fulton", "csm", "milnor", "chi", "mu")


class CLIError(Exception):
    def __init__(self, code, message, status):
        super().__init__(message)
        self.code = code
        self.status = status


def _fail(code, message, status=EXIT_INPUT):
    raise CLIError(code, message, status)


def _problem(args):
    if args.n is None or args.f is None:
        _fail("usage", "--n and --f are required")
    try:
        return HypersurfaceProblem.from_string(args.n, args.f, seed=args.seed)
    except PolynomialSyntaxError as exc:
        _fail("parse", f"cannot parse f: {exc}")
    except DegenerateInputError as exc:
        _fail(exc.reason, str(exc))
    except ValueError as exc:
        _fail("input", str(exc))


def _report(prob, method="chart"):
    try:
        return characteristic_classes(prob, method)
    except NonGenericSampleError as exc:
        _fail("non-generic", str(exc), EXIT_GENERICITY)


def _parse_classes(text):
    if text is None:
        return list(CLASS_NAMES)
    wanted = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in wanted if c not in CLASS_NAMES]
    if bad:
        _fail("usage", f"unknown class name(s) {', '.join(bad)}; choose from {','.join(CLASS_NAMES)}")
    return wanted


def format_report(report: ClassReport, f_text, classes):
    rows = [f"Z = V({f_text}) in P^{report.n}, degree {report.d}, seed {report.seed}"]
    values = {
        "degrees": "(" + ", ".join(str(g) for g in report.degrees.g) + ")",
        "segre": str(report.segre.segre),
        "fulton": str(report.fulton),
        "csm": str(report.csm),
        "milnor": str(report.milnor),
        "chi": str(report.csm_chi),
        "mu": str(report.csm_mu),
    }
    for name in classes:
        rows.append(f"{name:<8} {values[name]}")
    rows.append(f"{'euler':<8} {report.euler}")
    return "\n".join(rows)


def _write_json(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        _fail("io", f"cannot write {path}: {exc}")


def cmd_compute(args):
    classes = _parse_classes(args.classes)
    prob = _problem(args)
    report = _report(prob)
    print(format_report(report, args.f, classes))
    if args.json:
        _write_json(args.json, report.to_json())
    return EXIT_OK


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        _fail("io", f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        _fail("schema", f"{path} is not valid JSON: {exc}")


def cmd_strata(args):
    try:
        poset = load_stratification(args.input)
    except OSError as exc:
        _fail("io", f"cannot read {args.input}: {exc}")
    except StratificationError as exc:
        _fail("schema", str(exc))
    coeffs = alpha(poset)
    try:
        stratified = stratified_milnor_class(poset)
        sectional = sectional_milnor_class(poset)
    except StratificationError as exc:
        _fail("schema", str(exc))
    print(f"stratification of a degree-{poset.d} hypersurface in P^{poset.n}")
    for s in poset.descending():
        print(f"  {s.id:<12} dim {s.dim}  mu {s.mu:>4}  alpha {coeffs[s.id]:>4}")
    print(f"{'stratified':<11} {stratified}")
    # the sectional formula needs Z' data on every positive-dimensional stratum
    sectional_ok = all(s.dim == 0 or s.closure_cap_zprime_csm is not None or coeffs[s.id] == 0
                       for s in poset.strata)
    print(f"{'sectional':<11} {sectional if sectional_ok else 'n/a (missing Z-prime data)'}")
    if not args.against:
        return EXIT_OK
    data = _read_json(args.against)
    if not isinstance(data, dict) or "milnor" not in data or "n" not in data:
        _fail("schema", f"{args.against} is not a class report")
    if data["n"] != poset.n or data.get("d") != poset.d:
        _fail("schema", f"report is for n={data['n']}, d={data.get('d')}; "
                        f"stratification is for n={poset.n}, d={poset.d}")
    try:
        milnor = ChowClass.from_dict(poset.n, data["milnor"])
    except (ValueError, TypeError, AttributeError) as exc:
        _fail("schema", f"bad milnor class in report: {exc}")
    print(f"{'milnor':<11} {milnor}")
    equal = stratified == milnor and (not sectional_ok or sectional == milnor)
    print("EQUAL" if equal else "DIFFER")
    return EXIT_OK if equal else EXIT_MISMATCH


def cmd_check(args):
    prob = _problem(args)
    report = _report(prob)
    checks = dict(report.consistency_checks())
    try:
        other = projective_degrees(prob, method="saturate")
        checks["degrees_chart_equals_saturation"] = other == report.degrees
    except NonGenericSampleError as exc:
        _fail("non-generic", str(exc), EXIT_GENERICITY)
    for name, ok in checks.items():
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    if prob.singular_dimension == 0:
        print(f"info total_tjurina_number {total_tjurina_number(prob)} "
              f"(equals the Milnor-class degree {report.milnor.integral()} "
              "for quasi-homogeneous singularities)")
    return EXIT_OK if all(checks.values()) else EXIT_MISMATCH


def build_parser():
    parser = argparse.ArgumentParser(
        prog="milnorclass",
        description="Fulton, CSM and Milnor classes of hypersurfaces in P^n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_poly_args(p):
        p.add_argument("--n", type=int, help="ambient projective dimension")
        p.add_argument("--f", help="homogeneous polynomial, e.g. \"y^2*z - x^3\"")
        p.add_argument("--seed", type=int, default=42, help="seed for generic choices (default 42)")

    p = sub.add_parser("compute", help="compute the classes of V(f)")
    add_poly_args(p)
    p.add_argument("--classes", help="comma-separated subset of " + ",".join(CLASS_NAMES))
    p.add_argument("--json", metavar="PATH", help="write the report as JSON ('-' for stdout)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("strata", help="evaluate stratified formulas for the Milnor class")
    p.add_argument("--input", required=True, metavar="PATH", help="stratification JSON")
    p.add_argument("--against", metavar="PATH", help="report JSON from a previous compute run")
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("check", help="verify internal identities for V(f)")
    add_poly_args(p)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching the input-error code
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
