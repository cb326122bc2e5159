"""Command-line surface.

Subcommands::

    weylharm normal-order "a1*c1" --d 1
    weylharm order "z1*zb1" --q 1/2
    weylharm unorder "c1*a1 + 1" --q 0
    weylharm decompose "c1^2*a1^2" --q 1/2
    weylharm omega --d 1 --q 1/2 --kmax 6
    weylharm eta --d 2 --q 1/4 --k 3
    weylharm verify <suite> [--d D] [--q Q] [--deg N] [--kmax K] [--tol X]
                            [--seed S] [--quick] [--json]

Generators are spelled a1..ad (annihilation) and c1..cd (creation);
polynomial variables z1..zd and zb1..zbd.  --q takes an exact rational
string such as 1/2.  All randomized suites record their seed in the
report and default to seed 0, so identical invocations produce identical
output; exit status is nonzero when any case fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify as V
from .expr import format_cpoly, format_weyl, parse_poly, parse_weyl
from .ordering import OrderingContext, order_q, unorder_q
from .radial import RadialContext, decompose_weyl, eta

SUITES = ("sl2", "intertwine", "radial", "harmonics", "hahn",
          "orthogonality", "genfun", "all")


def _fraction(text: str) -> Fraction:
    if "." in text:
        raise argparse.ArgumentTypeError(
            f"decimals are not exact; write a rational like 1/2, got {text!r}"
        )
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylharm",
        description="Exact q-ordered Weyl algebra kernel and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, expr=False, need_q=False, k=False, kmax=False):
        if expr:
            p.add_argument("expression")
        p.add_argument("--d", type=int, default=None if expr else 1,
                       help="mode count (inferred from indices when omitted)")
        if need_q:
            p.add_argument("--q", type=_fraction, required=True,
                           help="exact rational ordering parameter, e.g. 1/2")
        if k:
            p.add_argument("--k", type=int, required=True)
        if kmax:
            p.add_argument("--kmax", type=int, default=8)
        p.add_argument("--json", action="store_true", help="emit JSON")

    add_common(sub.add_parser("normal-order", help="normal form of a Weyl expression"),
               expr=True)
    add_common(sub.add_parser("order", help="apply the ordering map to a polynomial"),
               expr=True, need_q=True)
    add_common(sub.add_parser("unorder", help="invert the ordering map"),
               expr=True, need_q=True)
    add_common(sub.add_parser("decompose",
                              help="radial-times-harmonic decomposition of a Weyl expression"),
               expr=True, need_q=True)
    add_common(sub.add_parser("omega", help="table of the radial polynomials"),
               need_q=True, kmax=True)
    add_common(sub.add_parser("eta", help="a radial basis element of the Weyl algebra"),
               need_q=True, k=True)

    vp = sub.add_parser("verify", help="run a verification suite")
    vp.add_argument("suite", choices=SUITES)
    vp.add_argument("--d", type=int, default=2)
    vp.add_argument("--q", type=_fraction, default=Fraction(1, 2))
    vp.add_argument("--deg", type=int, default=4)
    vp.add_argument("--k", type=int, default=None)
    vp.add_argument("--kmax", type=int, default=8)
    vp.add_argument("--count", type=int, default=20)
    vp.add_argument("--tol", type=float, default=1e-8)
    vp.add_argument("--order", type=int, default=10)
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--quick", action="store_true")
    vp.add_argument("--json", action="store_true")
    return parser


def _emit(payload: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _print_report(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True))
        return
    header = f"suite {report['suite']}  params {report['params']}  seed {report['seed']}"
    print(header)
    width = max((len(c["id"]) for c in report["cases"]), default=10)
    for case in report["cases"]:
        line = f"  [{case['status']}] {case['id']:<{width}}"
        if case["detail"]:
            line += f"  {case['detail']}"
        print(line)
    if "table" in report:
        print("  k : coefficients (ascending degree)")
        for row in report["table"]:
            print(f"  {row['k']:>2} : {', '.join(row['coeffs'])}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "normal-order":
        w = parse_weyl(args.expression, args.d)
        _emit(w.to_json_dict(), args.json, format_weyl(w))
        return 0

    if args.command == "order":
        p = parse_poly(args.expression, args.d)
        ctx = OrderingContext(p.d, args.q)
        w = order_q(ctx, p)
        _emit(w.to_json_dict(), args.json, format_weyl(w))
        return 0

    if args.command == "unorder":
        w = parse_weyl(args.expression, args.d)
        ctx = OrderingContext(w.d, args.q)
        p = unorder_q(ctx, w)
        _emit(p.to_json_dict(), args.json, format_cpoly(p))
        return 0

    if args.command == "decompose":
        w = parse_weyl(args.expression, args.d)
        ctx = RadialContext(w.d, args.q)
        parts = decompose_weyl(ctx, w)
        payload = {
            "d": w.d,
            "q": str(args.q),
            "parts": [{"k": k, "harmonic": h.to_json_dict()} for k, h in parts],
        }
        human = "\n".join(f"k={k}: {format_cpoly(h)}" for k, h in parts) or "0"
        _emit(payload, args.json, human)
        return 0

    if args.command == "omega":
        table = V.omega_table(args.d, args.q, args.kmax)
        payload = {"d": args.d, "q": str(args.q), "omegas": table}
        lines = [" k : coefficients (ascending degree)"]
        lines += [f"{row['k']:>2} : {', '.join(row['coeffs'])}" for row in table]
        _emit(payload, args.json, "\n".join(lines))
        return 0

    if args.command == "eta":
        ctx = RadialContext(args.d, args.q)
        w = eta(ctx, args.k)
        _emit(w.to_json_dict(), args.json, format_weyl(w))
        return 0

    # verify
    reports = _run_suite(args)
    failed = False
    for report in reports:
        _print_report(report, args.json)
        failed |= V.report_failed(report)
    return 1 if failed else 0


def _run_suite(args) -> list:
    name = args.suite
    if name == "sl2":
        return [V.suite_sl2(args.d, args.q, args.deg, args.count, args.seed)]
    if name == "intertwine":
        return [V.suite_intertwine(args.d, args.q, args.deg, args.count, args.seed)]
    if name == "radial":
        return [V.suite_radial(args.d, args.q, args.kmax, args.seed)]
    if name == "harmonics":
        return [V.suite_harmonics(args.d, k_max=min(args.kmax, 4),
                                  count=args.count, deg=args.deg, seed=args.seed)]
    if name == "hahn":
        return [V.suite_hahn(args.kmax, d_max=4, seed=args.seed)]
    if name == "orthogonality":
        return [V.suite_orthogonality(args.d, args.kmax, args.tol, args.seed)]
    if name == "genfun":
        return [V.suite_genfun(args.q, args.d, args.order, args.tol, args.seed)]
    return V.suite_all(seed=args.seed, quick=args.quick)


if __name__ == "__main__":
    sys.exit(main())
