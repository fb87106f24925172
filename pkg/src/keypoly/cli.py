"""Command line front end.

Compositions are written as comma-separated nonnegative integers with no
brackets, e.g. ``keypoly key 1,3,2``.  Output is JSON on stdout, compact
by default and indented with --pretty.  Exit codes: 0 success / verified,
1 verified-false (an honest negative answer), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .diagram import skyline
from .filling import Filling, enumerate_fillings, enumerate_sorted_fillings, optimize
from .moves import closure_order, leq_kappa
from .polynomial import key_polynomial
from .verify import SUITE_NAMES, run_verification

__all__ = ["main", "console_main"]


class _UsageError(Exception):
    pass


def _parse_composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise _UsageError(f"cannot parse composition {text!r}") from None
    if any(p < 0 for p in parts):
        raise _UsageError(f"composition parts must be nonnegative: {text!r}")
    return parts


def _emit(payload, pretty: bool) -> None:
    if pretty:
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(payload, separators=(",", ":")))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="keypoly",
        description="Key polynomials, skyline fillings, move order, and polytope checks.",
    )
    style = parser.add_mutually_exclusive_group()
    style.add_argument("--json", action="store_true", help="compact JSON output (default)")
    style.add_argument("--pretty", action="store_true", help="indented JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("key", help="key polynomial of a composition")
    p.add_argument("alpha")

    p = sub.add_parser("exponents", help="exponent vectors of the key polynomial")
    p.add_argument("alpha")

    p = sub.add_parser("closure", help="all vectors reachable by legal moves")
    p.add_argument("alpha")

    p = sub.add_parser("check", help="decide reachability and print a witness chain")
    p.add_argument("beta")
    p.add_argument("alpha")

    p = sub.add_parser("fillings", help="column-strict flagged fillings of the skyline diagram")
    p.add_argument("alpha")
    p.add_argument(
        "--increasing",
        action="store_true",
        help="only fillings whose columns increase top to bottom",
    )

    p = sub.add_parser("opt", help="optimize a filling given as JSON (file or - for stdin)")
    p.add_argument("path")

    p = sub.add_parser("verify", help="run the cross-check suites and write report.json")
    p.add_argument("--n", type=int, default=3, dest="n_max")
    p.add_argument("--parts", type=int, default=3, dest="part_max")
    p.add_argument(
        "--suite",
        action="append",
        choices=list(SUITE_NAMES) + ["all"],
        help="suite to run (repeatable; default all)",
    )
    p.add_argument("--slow", action="store_true", help="extend the bruhat sweep to S_5")
    p.add_argument("--force", action="store_true", help="allow --n beyond 5")
    p.add_argument("--out", help="report path (default $REPORT_DIR/report.json)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return int(exc.code or 0)

    pretty = bool(args.pretty)
    try:
        if args.command == "key":
            alpha = _parse_composition(args.alpha)
            _emit(key_polynomial(alpha).to_json_dict(), pretty)
            return 0

        if args.command == "exponents":
            alpha = _parse_composition(args.alpha)
            exps = sorted(key_polynomial(alpha).exponents(), reverse=True)
            _emit([list(e) for e in exps], pretty)
            return 0

        if args.command == "closure":
            alpha = _parse_composition(args.alpha)
            _emit([list(v) for v in closure_order(alpha)], pretty)
            return 0

        if args.command == "check":
            beta = _parse_composition(args.beta)
            alpha = _parse_composition(args.alpha)
            if len(beta) != len(alpha):
                raise _UsageError("beta and alpha must have the same length")
            ok, chain = leq_kappa(beta, alpha)
            if not ok:
                print("not ≤_κ")
                return 1
            _emit(chain.to_json_dict(), pretty)
            return 0

        if args.command == "fillings":
            alpha = _parse_composition(args.alpha)
            d = skyline(alpha)
            source = enumerate_sorted_fillings(d) if args.increasing else enumerate_fillings(d)
            _emit([f.to_json_dict() for f in source], pretty)
            return 0

        if args.command == "opt":
            if args.path == "-":
                data = json.load(sys.stdin)
            else:
                with open(args.path) as handle:
                    data = json.load(handle)
            result = optimize(Filling.from_json_dict(data))
            _emit(result.to_json_dict(), pretty)
            return 0

        if args.command == "verify":
            if args.n_max > 5 and not args.force:
                raise _UsageError("--n beyond 5 needs --force")
            if args.n_max < 1 or args.part_max < 0:
                raise _UsageError("--n must be >= 1 and --parts >= 0")
            names = tuple(args.suite) if args.suite else ("all",)
            if "all" in names:
                names = SUITE_NAMES
            report = run_verification(args.n_max, args.part_max, names, slow=args.slow)
            out_path = args.out
            if out_path is None:
                out_path = os.path.join(os.environ.get("REPORT_DIR", "."), "report.json")
            with open(out_path, "w") as handle:
                json.dump(report.to_json_dict(), handle, indent=2)
                handle.write("\n")
            _emit(
                {
                    "passed": report.passed,
                    "report": out_path,
                    "suites": {s.name: s.passed for s in report.suites},
                    "wall_time_s": round(report.wall_time_s, 3),
                },
                pretty,
            )
            return 0 if report.passed else 1

    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    raise AssertionError("unreachable")


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
