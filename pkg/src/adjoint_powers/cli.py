"""Command-line front end.

Emits the exact tables (difference table, derangements, higher
derangements), the tensor-power coefficient rows, the generating-function
series, and runs the two verification suites.  Output on stdout is
byte-identical for identical arguments; diagnostics (including timings)
go to stderr.

Exit codes: 0 success, 1 verification failure (report still printed),
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys

from . import coefficients, combinatorics, lie
from .combinatorics import ExactDivisionError
from .serialize import canonical_json

TABLE_FORMATS = ("markdown", "csv", "json")
REPORT_FORMATS = ("text", "json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adjoint-powers",
        description="Exact adjoint tensor-power decomposition tables and their verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print one of the exact integer tables")
    table.add_argument(
        "which",
        choices=("euler", "derangement", "higher"),
        help="difference table, derangement numbers, or higher derangement numbers",
    )
    table.add_argument("--max", type=int, required=True, help="largest row index")
    table.add_argument("--format", choices=TABLE_FORMATS, default="markdown")

    coeffs = sub.add_parser("coeffs", help="tensor-power decomposition coefficients")
    which_rows = coeffs.add_mutually_exclusive_group(required=True)
    which_rows.add_argument("--k", type=int, help="single power")
    which_rows.add_argument("--upto", type=int, help="all powers 1..K")
    coeffs.add_argument("--format", choices=TABLE_FORMATS, default="markdown")

    series = sub.add_parser(
        "series", help="exact rational series of exp(-x)/(1-x)^(k+1)"
    )
    series.add_argument("--k", type=int, required=True, help="series parameter")
    series.add_argument("--order", type=int, required=True, help="truncation order")
    series.add_argument("--format", choices=TABLE_FORMATS, default="markdown")

    verify = sub.add_parser("verify", help="run a verification suite")
    vsub = verify.add_subparsers(dest="suite", required=True)
    vcomb = vsub.add_parser(
        "combinatorics", help="cross-check every formula route against the others"
    )
    vcomb.add_argument("--max", type=int, required=True, help="largest index swept")
    vcomb.add_argument("--format", choices=REPORT_FORMATS, default="text")
    voracle = vsub.add_parser(
        "oracle", help="certify the coefficients representation-theoretically"
    )
    voracle.add_argument("--kmax", type=int, required=True, help="largest tensor power")
    voracle.add_argument("--n", type=int, required=True, help="algebra rank")
    voracle.add_argument("--format", choices=REPORT_FORMATS, default="text")

    return parser


def _require_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"--{name} must be nonnegative, got {value}")


def _markdown(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |"]
    lines.append("|" + "|".join(" --- " for _ in header) + "|")
    lines.extend("| " + " | ".join(cells) + " |" for cells in rows)
    return "\n".join(lines)


def _cmd_table(args) -> int:
    _require_nonnegative(max=args.max)
    if args.which == "euler":
        table = combinatorics.euler_table(args.max)
        if args.format == "json":
            payload = {
                "max_index": table.max_index,
                "rows": [
                    {"k": k, "entries": [str(v) for v in table.row(k)]}
                    for k in range(table.max_index + 1)
                ],
            }
            print(canonical_json(payload))
        elif args.format == "csv":
            for k in range(table.max_index + 1):
                print(",".join([str(k), *map(str, table.row(k))]))
        else:
            header = ["k"] + [f"j={j}" for j in range(table.max_index + 1)]
            rows = [
                [str(k), *map(str, table.row(k))] for k in range(table.max_index + 1)
            ]
            print(_markdown(header, rows))
        return 0
    if args.which == "derangement":
        values = [combinatorics.derangement(k) for k in range(args.max + 1)]
        if args.format == "json":
            payload = {"max_index": args.max, "values": [str(v) for v in values]}
            print(canonical_json(payload))
        elif args.format == "csv":
            for k, value in enumerate(values):
                print(f"{k},{value}")
        else:
            print(_markdown(["k", "derangements"], [[str(k), str(v)] for k, v in enumerate(values)]))
        return 0
    table = combinatorics.higher_derangement_table(args.max)
    if args.format == "json":
        payload = {
            "max_index": table.max_index,
            "rows": [
                {"n": m, "entries": [str(v) for v in table.row(m)]}
                for m in range(table.max_index + 1)
            ],
        }
        print(canonical_json(payload))
    elif args.format == "csv":
        for m in range(table.max_index + 1):
            print(",".join([str(m), *map(str, table.row(m))]))
    else:
        header = ["n"] + [f"k={k}" for k in range(table.max_index + 1)]
        rows = [[str(m), *map(str, table.row(m))] for m in range(table.max_index + 1)]
        print(_markdown(header, rows))
    return 0


def _cmd_coeffs(args) -> int:
    if args.k is not None:
        _require_nonnegative(k=args.k)
        row = coefficients.coefficient_row(args.k)
        if args.format == "json":
            payload = {"k": row.power, "coefficients": [str(v) for v in row.values]}
            print(canonical_json(payload))
        elif args.format == "csv":
            print(",".join(str(v) for v in row.values))
        else:
            header = ["k"] + [f"j={j}" for j in range(len(row.values))]
            print(_markdown(header, [[str(row.power), *map(str, row.values)]]))
        return 0
    _require_nonnegative(upto=args.upto)
    table = coefficients.decomposition_table(args.upto)
    print(coefficients.render_table(table, args.format))
    return 0


def _cmd_series(args) -> int:
    _require_nonnegative(k=args.k, order=args.order)
    series = combinatorics.egf_coefficients(args.k, args.order)
    if args.format == "json":
        payload = {
            "k": series.parameter,
            "order": series.order,
            "coefficients": [str(c) for c in series.coefficients],
        }
        print(canonical_json(payload))
    elif args.format == "csv":
        for m, value in enumerate(series.coefficients):
            print(f"{m},{value}")
    else:
        rows = [[str(m), str(c)] for m, c in enumerate(series.coefficients)]
        print(_markdown(["m", "coefficient"], rows))
    return 0


def _combinatorics_checks(limit: int) -> list[tuple[str, bool, str]]:
    """Every cross-formula invariant of the two combinatorics modules."""
    checks: list[tuple[str, bool, str]] = []

    def record(name: str, fn) -> None:
        try:
            fn()
        except AssertionError as exc:
            checks.append((name, False, str(exc)))
        except ExactDivisionError as exc:
            checks.append((name, False, f"exact division violated: {exc}"))
        else:
            checks.append((name, True, ""))

    def derangement_routes() -> None:
        table = combinatorics.euler_table(limit)
        for k in range(limit + 1):
            adjacent = combinatorics.derangement(k, "adjacent")
            alternating = combinatorics.derangement(k, "alternating")
            column = table.entry(k, 0)
            assert adjacent == alternating == column, f"k={k}"

    def enumeration() -> None:
        for k in range(min(limit, 9) + 1):
            assert combinatorics.derangement(k) == combinatorics.derangement_enumeration_oracle(k), f"k={k}"

    def divisibility() -> None:
        table = combinatorics.euler_table(limit)
        for k in range(limit + 1):
            for j in range(k + 1):
                assert table.entry(k, j) % combinatorics.factorial(j) == 0, f"(k,j)=({k},{j})"

    def higher_routes() -> None:
        for n in range(limit + 1):
            for k in range(n + 1):
                table = combinatorics.higher_derangement(n, k, "table")
                recurrence = combinatorics.higher_derangement(n, k, "recurrence")
                closed = combinatorics.higher_derangement(n, k, "closed_form")
                assert table == recurrence == closed, f"(n,k)=({n},{k})"

    def higher_laws() -> None:
        for n in range(limit + 1):
            assert combinatorics.higher_derangement(n, n) == 1, f"diagonal n={n}"
            if n >= 1:
                assert combinatorics.higher_derangement(n, n - 1) == n - 1, f"subdiagonal n={n}"

    def series_consistency() -> None:
        for k in range(min(limit, 8) + 1):
            series = combinatorics.egf_coefficients(k, 20)
            for m in range(21):
                value = series.coefficient(m) * combinatorics.factorial(m)
                assert value == combinatorics.higher_derangement(m + k, k), f"(k,m)=({k},{m})"

    def coefficient_routes() -> None:
        if limit < 1:
            return
        table = coefficients.decomposition_table(limit)
        for k in range(1, limit + 1):
            row = table.row(k).values
            for j in range(k + 1):
                closed = coefficients.coefficient(k, j)
                contraction = coefficients.coefficient_by_contraction(k, j)
                assert closed == contraction == row[j], f"(k,j)=({k},{j})"

    record(f"derangement routes agree (0..{limit})", derangement_routes)
    record(f"enumeration oracle matches (0..{min(limit, 9)})", enumeration)
    record(f"difference-table entries divisible by column factorial (0..{limit})", divisibility)
    record(f"higher derangement routes agree (0..{limit})", higher_routes)
    record(f"higher derangement diagonal and subdiagonal laws (0..{limit})", higher_laws)
    record(f"series coefficients match higher derangements (k<=min({limit},8), m<=20)", series_consistency)
    record(f"coefficient routes agree (0..{limit})", coefficient_routes)
    return checks


def _cmd_verify_combinatorics(args) -> int:
    _require_nonnegative(max=args.max)
    checks = _combinatorics_checks(args.max)
    passed = all(ok for _, ok, _ in checks)
    if args.format == "json":
        payload = {
            "suite": "combinatorics",
            "max": args.max,
            "passed": passed,
            "checks": [
                {"name": name, "passed": ok, "detail": detail}
                for name, ok, detail in checks
            ],
        }
        print(canonical_json(payload))
    else:
        for name, ok, detail in checks:
            print(f"ok {name}" if ok else f"FAIL {name}: {detail}")
        print(f"result: {'PASS' if passed else 'FAIL'}")
    return 0 if passed else 1


def _render_report_text(report: lie.VerificationReport) -> str:
    lines = [f"verify oracle: k_max={report.k_max} rank={report.rank}"]
    for check in report.checks:
        status = "ok" if check.passed else "FAIL"
        lines.append(
            f"k={check.power} {status} dimension={check.dimension_observed}"
            f" trivial={check.trivial_observed}"
        )
        if check.dimension_expected != check.dimension_observed:
            lines.append(
                f"  dimension mismatch: expected {check.dimension_expected},"
                f" observed {check.dimension_observed}"
            )
        if check.trivial_expected != check.trivial_observed:
            lines.append(
                f"  trivial multiplicity mismatch: expected {check.trivial_expected},"
                f" observed {check.trivial_observed}"
            )
        if not check.leading_ok:
            lines.append("  leading label missing or off unit multiplicity")
        for label, mult in sorted(check.negative_entries.items()):
            lines.append(f"  negative block entry {_label_text(label)}: {mult}")
        for label, (expected, observed) in sorted(check.residual.items()):
            lines.append(
                f"  residual {_label_text(label)}: expected {expected}, observed {observed}"
            )
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def _label_text(label: lie.StableLabel) -> str:
    return f"({list(label.left)},{list(label.right)})"


def _cmd_verify_oracle(args) -> int:
    _require_nonnegative(kmax=args.kmax, n=args.n)
    if args.n < 1:
        raise ValueError(f"--n must be at least 1, got {args.n}")
    if 2 * args.kmax > args.n + 1:
        raise ValueError(
            f"stable range requires 2*kmax <= n+1, got kmax={args.kmax}, n={args.n}"
        )
    report = lie.verify_stable_decomposition(args.kmax, args.n)
    if args.format == "json":
        print(canonical_json(report.to_payload()))
    else:
        print(_render_report_text(report))
    print(
        f"verified k_max={report.k_max} rank={report.rank} in {report.seconds:.3f}s",
        file=sys.stderr,
    )
    return 0 if report.passed else 1


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "coeffs":
            return _cmd_coeffs(args)
        if args.command == "series":
            return _cmd_series(args)
        if args.suite == "combinatorics":
            return _cmd_verify_combinatorics(args)
        return _cmd_verify_oracle(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ExactDivisionError, lie.NegativeMultiplicityError, lie.BlockExtractionError) as exc:
        # An exact-arithmetic assertion failed: the formulas were falsified.
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())
