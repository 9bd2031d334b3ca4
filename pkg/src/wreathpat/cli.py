"""Command-line front end: ``wreathpat <command> ...``.

Exit status: 0 success, 1 a requested check failed, 2 bad arguments,
3 the enumeration budget was exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import closed_forms as cf
from . import registry
from .bijection import CAT_SET, certify_bijection, matrix_diagram, to_dyck, to_lattice_path
from .core import MODES, REDUCED, InvalidInput, parse_colored_permutation, parse_patterns
from .enumeration import DEFAULT_BUDGET, BudgetExceeded, EnumSpec, avoiders, count_avoiders, distribution, sequence
from .fixtures import A002720, KNOWN_12_01
from .series import EGF, OGF, TruncatedSeries, egf_product_coeffs, ogf_upsilon_coeffs, pat2_coeffs, pat2_ode_residual

SCHEMA = "wreathpat/v1"

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class CheckFailed(Exception):
    pass


def _frac(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Output:
    """Renders one command's result as table, csv or json."""

    def __init__(self, fmt: str, command: str, params: dict[str, Any]):
        self.fmt = fmt
        self.command = command
        self.params = params

    def emit(self, header: Sequence[str], rows: list[Sequence[Any]], result: Any, lines: list[str] | None = None) -> str:
        if self.fmt == "json":
            doc = {"schema": SCHEMA, "command": self.command, "params": self.params, "result": result}
            return json.dumps(doc, sort_keys=True, indent=2)
        if self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
            return buf.getvalue().rstrip("\n")
        if lines is not None:
            return "\n".join(lines)
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)] if rows else [len(h) for h in header]
        fmt_row = lambda r: "  ".join(str(x).rjust(wd) for x, wd in zip(r, widths))  # noqa: E731
        return "\n".join([fmt_row(header)] + [fmt_row(r) for r in rows])


# -- commands ------------------------------------------------------------

def cmd_count(args) -> int:
    S = parse_patterns(args.patterns, args.mode)
    value = count_avoiders(EnumSpec(args.n, args.k, args.budget), S, jobs=args.jobs)
    out = Output(args.format, "count", {"n": args.n, "k": args.k, "patterns": S.encode(), "mode": args.mode})
    print(out.emit(["n", "k", "count"], [[args.n, args.k, value]],
                   {"n": args.n, "k": args.k, "count": value}, lines=[str(value)]))
    return EXIT_OK


def cmd_sequence(args) -> int:
    S = parse_patterns(args.patterns, args.mode)
    seq = sequence(args.k, S, args.n_max, budget=args.budget, jobs=args.jobs)
    rows = [[n, args.k, v] for n, v in enumerate(seq.values, start=1)]
    lines = [str(v) for v in seq.values]
    if seq.truncated:
        lines.append(f"... truncated at n={seq.truncated_at} (budget {args.budget})")
    params = {"k": args.k, "patterns": S.encode(), "mode": args.mode, "n_max": args.n_max}
    result = {"values": seq.values, "truncated_at": seq.truncated_at}
    print(Output(args.format, "sequence", params).emit(["n", "k", "count"], rows, result, lines))
    if args.figure:
        from .plotting import plot_sequence

        ref = None
        if args.mode == REDUCED and S.encode() == "1-2/0,1":
            ref = KNOWN_12_01.get(args.k)
        plot_sequence(seq.values, args.figure, label=f"k={args.k} {S.encode()}", reference=ref)
    return EXIT_OK


def cmd_distribution(args) -> int:
    S = parse_patterns(args.patterns, args.mode)
    if len(S) != 1:
        raise InvalidInput("distribution takes exactly one pattern")
    p = S.patterns[0]
    table = distribution(EnumSpec(args.n, args.k, args.budget), p, jobs=args.jobs)
    rows = [[j, c] for j, c in sorted(table.items())]
    params = {"n": args.n, "k": args.k, "pattern": p.encode(), "mode": args.mode}
    result = {str(j): c for j, c in sorted(table.items())}
    print(Output(args.format, "distribution", params).emit(["j", "count"], rows, result))
    if args.figure:
        from .plotting import plot_distribution

        plot_distribution(table, args.figure, title=f"{p} in C_{args.k} wr S_{args.n}")
    return EXIT_OK


def cmd_formula(args) -> int:
    if args.list:
        entries = [registry.REGISTRY[i].describe() for i in sorted(registry.REGISTRY)]
        if args.format == "table":
            for e in entries:
                print(f"{e['id']:<18} k={e['k']!s:<4} n>={e['n_min']}  {e['mode']:<7} {';'.join(e['patterns'])}  # {e['description']}")
        else:
            rows = [[e["id"], e["mode"], ";".join(e["patterns"]), e["n_min"], e["k"], e["description"]] for e in entries]
            print(Output(args.format, "formula", {"list": True}).emit(
                ["id", "mode", "patterns", "n_min", "k", "description"], rows, entries))
        return EXIT_OK
    if not args.formula_id or args.n is None:
        raise InvalidInput("formula needs --id and --n (or --list)")
    f = registry.get(args.formula_id)
    k = args.k if args.k is not None else (f.k_fixed or 2)
    value = f(args.n, k)
    oracle = verdict = None
    if args.check:
        oracle = f.oracle(args.n, k, budget=args.budget, jobs=args.jobs)
        verdict = "PASS" if oracle == value else "FAIL"
    params = {"id": f.id, "n": args.n, "k": k}
    result = {"value": value, "oracle": oracle, "verdict": verdict, "patterns": list(f.patterns), "mode": f.mode}
    lines = [str(value)]
    if verdict:
        lines.append(f"cross-check {verdict} (enumeration {oracle})")
    print(Output(args.format, "formula", params).emit(
        ["id", "n", "k", "value", "oracle", "verdict"],
        [[f.id, args.n, k, value, "" if oracle is None else oracle, verdict or ""]], result, lines))
    if verdict == "FAIL":
        print(f"counterexample: n={args.n} k={k} formula {value} != enumeration {oracle}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_series(args) -> int:
    kind = args.kind
    n_max = args.n_max
    params = {"kind": kind, "n_max": n_max, "k": args.k}
    if kind == "pat2":
        counts = pat2_coeffs(n_max).values
        s = TruncatedSeries.from_counts(counts, EGF)
    elif kind == "ogf":
        counts = ogf_upsilon_coeffs(args.k, n_max).values
        s = TruncatedSeries.from_counts(counts, OGF)
    elif kind == "egf-product":
        base = {"ones": cf.ones, "catalan": cf.catalans, "factorials": cf.factorials}[args.sequence]
        counts = egf_product_coeffs(base(n_max), args.k, n_max)
        s = TruncatedSeries.from_counts(counts, EGF)
        params["sequence"] = args.sequence
    else:  # ode
        s = pat2_ode_residual(n_max)
        counts = list(s.coeffs)
    rows = [[n, _frac(c), _frac(v)] for n, (c, v) in enumerate(zip(s.coeffs, counts))]
    result = {"kind": s.kind, "coefficients": [_frac(c) for c in s.coeffs], "counts": [_frac(v) for v in counts]}
    print(Output(args.format, "series", params).emit(["n", "coefficient", "count"], rows, result))
    if kind == "ode" and not s.is_zero():
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_bijection(args) -> int:
    if args.certify is not None:
        report = certify_bijection(args.certify, budget=args.budget)
        d = report.as_dict()
        lines = [f"n={d['n']} avoiders={d['avoiders']} valid={d['valid_paths']} distinct={d['distinct_paths']} "
                 f"catalan={d['catalan']} {'PASS' if report.passed else 'FAIL'}"]
        if report.counterexample:
            lines.append(f"counterexample: {report.counterexample}")
        print(Output(args.format, "bijection", {"certify": args.certify}).emit(
            list(d), [[d[c] if d[c] is not None else "" for c in d]], d, lines))
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED
    if args.element:
        g = parse_colored_permutation(args.element)
        elements = [g]
    elif args.n is not None:
        elements = list(avoiders(EnumSpec(args.n, 2, args.budget), CAT_SET))
    else:
        raise InvalidInput("bijection needs --element, --n or --certify")
    rows, result, lines = [], [], []
    for g in elements:
        path = to_lattice_path(g)
        dyck = to_dyck(path)
        sig, col = ",".join(map(str, g.perm)), ",".join(map(str, g.colors))
        rows.append([sig, col, path.steps, dyck.steps])
        result.append({"sigma": list(g.perm), "colors": list(g.colors), "path": path.steps, "dyck": dyck.steps})
        if args.element:
            lines.append(matrix_diagram(g, path))
        else:
            lines.append(f"{g}  {path.steps}  {dyck.steps}")
    print(Output(args.format, "bijection", {"element": args.element, "n": args.n}).emit(
        ["sigma", "colors", "path", "dyck"], rows, result, lines))
    if args.figure and args.element:
        from .plotting import plot_bijection

        plot_bijection(elements[0], args.figure)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_all

    results = []
    failed = None
    for res in run_all(args.max_budget, jobs=args.jobs):
        results.append(res)
        if args.format == "table":
            line = f"{'PASS' if res.passed else 'FAIL'}  {res.id}  ({res.cases} cases)"
            if res.counterexample:
                line += f"  counterexample: {res.counterexample}"
            print(line, flush=True)
        if not res.passed and failed is None:
            failed = res
    if args.format != "table":
        rows = [[r.id, "PASS" if r.passed else "FAIL", r.cases, r.counterexample or ""] for r in results]
        print(Output(args.format, "verify", {"max_budget": args.max_budget}).emit(
            ["id", "verdict", "cases", "counterexample"], rows, [r.as_dict() for r in results]))
    if failed is not None:
        print(f"first failure: {failed.id}: {failed.counterexample}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "csv", "json"], default="table")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="largest k^n n! that may be enumerated (default 10^8)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")

    pats = argparse.ArgumentParser(add_help=False)
    pats.add_argument("--patterns", required=True,
                      help="semicolon-separated patterns, e.g. '1-2/0,0;1-2/0,1' (no dash = adjacent)")
    pats.add_argument("--mode", choices=MODES, default=REDUCED,
                      help="reduced: colors compared after reduction; exact: colors must agree")

    parser = argparse.ArgumentParser(prog="wreathpat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common, pats], help="count avoiders by enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sequence", parents=[common, pats], help="avoider counts for n = 1..n_max")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--figure", help="write a log-scale plot of the sequence to this file")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("distribution", parents=[common, pats], help="number of elements by occurrence count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--figure", help="write a bar chart of the distribution to this file")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed form by id")
    p.add_argument("--id", "--formula-id", dest="formula_id")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--check", action=argparse.BooleanOptionalAction, default=True,
                   help="cross-check against enumeration (default on)")
    p.add_argument("--list", action="store_true", help="print the formula registry")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("series", parents=[common], help="print generating-function coefficients")
    p.add_argument("--kind", choices=["pat2", "ode", "ogf", "egf-product"], required=True)
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--sequence", choices=["ones", "catalan", "factorials"], default="ones")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bijection", parents=[common], help="Dyck paths for C_2 bi-avoiders of 1-2/0,0 and 1-2/0,1")
    p.add_argument("--element", help="e.g. 'sigma=6,5,7,4,3,1,2 colors=1,1,0,1,0,1,0'")
    p.add_argument("--n", type=int, help="list the image of every avoider of size n")
    p.add_argument("--certify", type=int, metavar="N", help="check validity, injectivity and count for size N")
    p.add_argument("--figure", help="with --element, draw the matrix diagram and path to this file")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", parents=[common], help="run every oracle check")
    p.add_argument("--max-budget", type=int, default=10**6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidInput as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
