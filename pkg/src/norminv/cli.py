"""Command-line interface: eval, scan, bench, and report verbs.

Exit codes
----------
0   success
2   bad usage, unknown method, or p outside the method's domain
3   --assert-bound violated (scan completed; the bound did not hold)
4   malformed or unreadable CSV input, or output I/O failure

Output conventions
------------------
All numbers are printed with round-trip-exact shortest decimal formatting
(plus trailing-``.0`` trimming for eval, so ``eval rat22a 0.5`` prints
``0.5 0``). CSV output is RFC-4180 with a header row, UTF-8, LF line
endings, and is byte-deterministic for fixed inputs. With ``--output`` the
rows go to the file and the key=value summary to stdout; without it the
rows go to stdout and the summary to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .errors import ConvergenceError, DomainError

_EPILOG = """\
CSV columns:
  scan    method,region_lo,region_hi,p,approx,oracle,err
  bench   method,ns_per_eval,speedup_vs_as,total_evals,checksum,cov,reliable
  report  source,kind,method,region_lo,region_hi,points,max_abs_error,argmax_p,ns_per_eval,speedup_vs_as

exit codes:
  0  success
  2  usage error, unknown method, or p outside the method's domain
  3  --assert-bound violated
  4  malformed CSV input or I/O failure
"""


def _fmt(x: float) -> str:
    """Shortest round-trip decimal; integral values lose the trailing .0"""
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def _parse_region(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"expected two comma-separated floats, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected two comma-separated floats, got {text!r}") from None
    return lo, hi


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="norminv",
        description="Normal-quantile evaluators with error scans and benchmarks.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_eval = sub.add_parser(
        "eval", help="evaluate METHOD at one or more probabilities",
        description="Print 'p value' for each probability, one per line.")
    p_eval.add_argument("method")
    p_eval.add_argument("ps", metavar="p", type=float, nargs="+")
    p_eval.set_defaults(handler=_cmd_eval)

    p_scan = sub.add_parser(
        "scan", help="scan |METHOD - oracle| over a grid",
        description="Dense error scan; rows as CSV or text, summary as "
                    "key=value lines (stdout with --output, else stderr).")
    p_scan.add_argument("method")
    p_scan.add_argument("--region", type=_parse_region, metavar="a,b",
                        help="override the method's default scan region")
    p_scan.add_argument("--step", type=float,
                        help="linear grid step (default 1e-5)")
    p_scan.add_argument("--assert-bound", type=float, metavar="x",
                        help="exit 3 unless max_abs_error < x")
    p_scan.add_argument("--format", choices=("csv", "text"), default="csv")
    p_scan.add_argument("--output", metavar="path")
    p_scan.set_defaults(handler=_cmd_scan)

    p_bench = sub.add_parser(
        "bench", help="time evaluators over 999 probabilities x reps",
        description="Median-of-runs throughput benchmark with rotation, "
                    "checksum purity, and reliability flags.")
    p_bench.add_argument("methods", metavar="METHODS",
                         help="'all' or comma-separated method names")
    p_bench.add_argument("--reps", type=int, default=200_000)
    p_bench.add_argument("--format", choices=("csv", "text"), default="csv")
    p_bench.add_argument("--output", metavar="path")
    p_bench.set_defaults(handler=_cmd_bench)

    p_report = sub.add_parser(
        "report", help="merge scan/bench CSV files into one summary table",
        description="Read previously written scan and/or bench CSVs and "
                    "emit one merged row per method and region.")
    p_report.add_argument("inputs", metavar="file.csv", nargs="+")
    p_report.add_argument("--format", choices=("csv", "text"), default="csv")
    p_report.add_argument("--output", metavar="path")
    p_report.set_defaults(handler=_cmd_report)

    return parser


def _write_payload(payload: str, output: Optional[str]) -> Optional[int]:
    """Send payload to --output or stdout; exit 4 on file I/O failure."""
    if output is None:
        sys.stdout.write(payload)
        return None
    try:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
    except OSError as exc:
        print(f"cannot write {output!r}: {exc}", file=sys.stderr)
        return 4
    return None


def _cmd_eval(args) -> int:
    from . import analysis

    try:
        spec = analysis.get_method(args.method)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    for p in args.ps:
        print(f"{_fmt(p)} {_fmt(spec.func(p))}")
    return 0


def _cmd_scan(args) -> int:
    import io

    from . import analysis

    try:
        spec = analysis.get_method(args.method)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    data = analysis.run_scan(spec, region=args.region, step=args.step)
    report = data.report

    if args.format == "csv":
        buf = io.StringIO()
        analysis.write_scan_csv(buf, data)
        payload = buf.getvalue()
    else:
        lines = [f"{'p':<24} {'abs_err':<24} sign"]
        for ext in report.extrema:
            sign = "+" if ext.sign > 0 else ("-" if ext.sign < 0 else "0")
            lines.append(f"{ext.p!r:<24} {ext.abs_err!r:<24} {sign}")
        payload = "\n".join(lines) + "\n"

    summary = "\n".join(analysis.summary_lines(report)) + "\n"
    rc = _write_payload(payload, args.output)
    if rc is not None:
        return rc
    if args.output is not None:
        sys.stdout.write(summary)
    else:
        sys.stderr.write(summary)

    bound = args.assert_bound
    if bound is not None and not (report.max_abs_error < bound):
        print(f"bound violated: max_abs_error={report.max_abs_error!r} >= "
              f"{bound!r} for {report.method}", file=sys.stderr)
        return 3
    return 0


def _cmd_bench(args) -> int:
    from . import bench

    if args.methods.strip() == "all":
        methods = None
    else:
        methods = [m for m in args.methods.split(",") if m]
    try:
        results = bench.run_benchmark(methods=methods, reps=args.reps)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    for r in results:
        if not r.reliable:
            print(f"warning: timing for {r.method} flagged unreliable "
                  f"(cov={r.cov:.4f}, runs={len(r.runs_ns)})", file=sys.stderr)
    payload = (bench.results_to_csv(results) if args.format == "csv"
               else bench.results_to_text(results))
    rc = _write_payload(payload, args.output)
    return rc if rc is not None else 0


def _read_csv_rows(path: str):
    import csv

    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            return list(csv.reader(fh))
    except OSError as exc:
        raise _ReportError(f"cannot read {path!r}: {exc}") from exc


class _ReportError(Exception):
    pass


def _merge_reports(paths) -> List[dict]:
    from .analysis import SCAN_CSV_HEADER
    from .bench import BENCH_CSV_HEADER

    scan_cols = SCAN_CSV_HEADER.split(",")
    bench_cols = BENCH_CSV_HEADER.split(",")
    merged = []
    for path in paths:
        rows = _read_csv_rows(path)
        if not rows:
            raise _ReportError(f"{path}: empty file")
        header = rows[0]
        short = path.rsplit("/", 1)[-1]
        if header == scan_cols:
            groups = {}
            for i, row in enumerate(rows[1:], start=2):
                if len(row) != len(scan_cols):
                    raise _ReportError(f"{path}:{i}: expected "
                                       f"{len(scan_cols)} columns, got {len(row)}")
                method, lo, hi = row[0], row[1], row[2]
                try:
                    p, err = float(row[3]), float(row[6])
                except ValueError:
                    raise _ReportError(f"{path}:{i}: non-numeric field") from None
                key = (method, lo, hi)
                cur = groups.get(key)
                if cur is None or abs(err) > cur[1]:
                    groups[key] = (p, abs(err), 1 if cur is None else cur[2] + 1)
                else:
                    groups[key] = (cur[0], cur[1], cur[2] + 1)
            for (method, lo, hi), (p, mx, n) in sorted(groups.items()):
                merged.append({
                    "source": short, "kind": "scan", "method": method,
                    "region_lo": lo, "region_hi": hi, "points": str(n),
                    "max_abs_error": repr(mx), "argmax_p": repr(p),
                    "ns_per_eval": "", "speedup_vs_as": "",
                })
        elif header == bench_cols:
            for i, row in enumerate(rows[1:], start=2):
                if len(row) != len(bench_cols):
                    raise _ReportError(f"{path}:{i}: expected "
                                       f"{len(bench_cols)} columns, got {len(row)}")
                try:
                    float(row[1])
                except ValueError:
                    raise _ReportError(f"{path}:{i}: non-numeric field") from None
                merged.append({
                    "source": short, "kind": "bench", "method": row[0],
                    "region_lo": "", "region_hi": "", "points": "",
                    "max_abs_error": "", "argmax_p": "",
                    "ns_per_eval": row[1], "speedup_vs_as": row[2],
                })
        else:
            raise _ReportError(f"{path}: unrecognized CSV header "
                               f"{','.join(header)!r}")
    return merged


_REPORT_COLS = ("source", "kind", "method", "region_lo", "region_hi",
                "points", "max_abs_error", "argmax_p", "ns_per_eval",
                "speedup_vs_as")


def _cmd_report(args) -> int:
    try:
        merged = _merge_reports(args.inputs)
    except _ReportError as exc:
        print(str(exc), file=sys.stderr)
        return 4

    if args.format == "csv":
        lines = [",".join(_REPORT_COLS)]
        for row in merged:
            lines.append(",".join(row[c] for c in _REPORT_COLS))
        payload = "\n".join(lines) + "\n"
    else:
        widths = {c: max(len(c), *(len(r[c]) for r in merged)) if merged
                  else len(c) for c in _REPORT_COLS}
        lines = [" ".join(c.ljust(widths[c]) for c in _REPORT_COLS)]
        for row in merged:
            lines.append(" ".join(row[c].ljust(widths[c]) for c in _REPORT_COLS))
        payload = "\n".join(line.rstrip() for line in lines) + "\n"
    rc = _write_payload(payload, args.output)
    return rc if rc is not None else 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"oracle failure: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
