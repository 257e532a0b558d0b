"""Command-line entry point: ``diskzernike <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .calculus import SeminormConvention
from .errors import ZernikeError


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _j_list(args) -> list:
    from .experiments import default_j_list

    if args.j_list and args.table1_defaults:
        raise ZernikeError("--j-list and --table1-defaults are mutually exclusive")
    return args.j_list or default_j_list(args.l)


def _cmd_table(args) -> int:
    from .experiments import REFERENCE_ALPHA, REFERENCE_L, compare_with_reference, rate_table

    j_list = _j_list(args)
    table = rate_table(args.alpha, args.l, j_list, SeminormConvention(args.convention),
                       use_norms=args.use_norms, workers=args.workers)
    _emit(table.to_csv() if args.format == "csv" else table.to_json() + "\n", args.out)
    kind = "norms" if args.use_norms else "seminorms"
    print(f"# convention: {table.convention}; ratios of {kind}", file=sys.stderr)

    if not args.compare_reference:
        return 0
    if (args.alpha, args.l) != (REFERENCE_ALPHA, REFERENCE_L) or args.use_norms:
        print("# reference comparison needs --alpha 9.9 --l 3 without --use-norms",
              file=sys.stderr)
        return 2
    matched = []
    for conv in SeminormConvention:
        other = table if conv.value == table.convention else rate_table(
            args.alpha, args.l, j_list, conv, workers=args.workers)
        cmp = compare_with_reference(other)
        status = "matches" if cmp.matches else "does not match"
        print(f"# {conv.value}: {status} the reference table "
              f"(max rat rel err {cmp.max_rat_rel_error:.2e}, "
              f"max egr abs err {cmp.max_egr_abs_error:.2e}, rows {cmp.rows_checked}, "
              f"3-digit rounding mismatches {cmp.rounding_mismatches})", file=sys.stderr)
        if cmp.matches:
            matched.append(conv.value)
    return 0 if matched else 1


def _cmd_verify(args) -> int:
    from .checks import run_all

    ok = run_all(sys.stdout)
    print("all checks passed" if ok else "some checks FAILED")
    return 0 if ok else 1


def _cmd_rate(args) -> int:
    from dataclasses import asdict

    from .experiments import l2_rate_sweep

    sweep = l2_rate_sweep(args.function, args.alpha, args.k, args.degrees, method=args.method)
    if args.format == "csv":
        _emit(sweep.to_csv(), args.out)
    else:
        _emit(json.dumps(asdict(sweep), indent=2) + "\n", args.out)
    print(f"# fitted log-slope {sweep.fitted_slope:.4f}", file=sys.stderr)
    return 0


def _cmd_markov(args) -> int:
    from .experiments import markov_sweep

    rep = markov_sweep(args.alpha, args.max_degree, args.trials, args.seed)
    if args.format == "csv":
        lines = ["trial,degree,ratio"]
        lines += [f"{i},{N},{r!r}" for i, (N, r) in enumerate(zip(rep.degrees, rep.ratios))]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(rep.to_json() + "\n", args.out)
    print(f"# max ratio {rep.max_ratio:.6g} at degree {rep.argmax_degree}; "
          f"Bernstein bound {'holds' if rep.bernstein_holds else 'VIOLATED'}", file=sys.stderr)
    return 0 if rep.bernstein_holds else 1


def _cmd_plot_data(args) -> int:
    from .experiments import plot_data_csv, rate_table

    table = rate_table(args.alpha, args.l, _j_list(args), SeminormConvention(args.convention),
                       workers=args.workers)
    _emit(plot_data_csv(table), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diskzernike",
        description="Generalized Zernike polynomial experiments on the unit disk.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def table_args(p, with_format=True):
        p.add_argument("--alpha", type=float, default=9.9)
        p.add_argument("--l", type=int, default=3)
        p.add_argument("--j-list", type=_int_list, default=None,
                       help="comma-separated j values (strictly increasing, each >= l)")
        p.add_argument("--table1-defaults", action="store_true",
                       help="j = l + 2**i for i = 1..12 (the default when no --j-list)")
        p.add_argument("--convention", choices=[c.value for c in SeminormConvention],
                       default="cartesian")
        p.add_argument("--workers", type=int, default=1, help="rows computed in parallel")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("table", help="seminorm ratio table for the sharpness family")
    table_args(p)
    p.add_argument("--use-norms", action="store_true", help="full norms instead of seminorms")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--compare-reference", action="store_true",
                   help="also compute both conventions and compare with the stored reference values")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run the oracle and invariant suite")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("rate", help="L2 projection error sweep")
    p.add_argument("--function", default="exp_x1",
                   help="exp_x1, exp_x2, gaussian or sharpness")
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--degrees", type=_int_list, default=[4, 8, 12, 16])
    p.add_argument("--method", choices=["series", "quadrature"], default="series")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_rate)

    p = sub.add_parser("markov", help="random-polynomial Markov ratio sweep")
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--max-degree", type=int, default=40)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_markov)

    p = sub.add_parser("plot-data", help="log-log columns with reference power laws")
    table_args(p)
    p.set_defaults(func=_cmd_plot_data)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ZernikeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
