"""
Batch driver: run verification reports and print them as JSON lines.

Usage::

    python src/cli.py cohomology --case s2-semidirect --params l=3/2
    python src/cli.py report-all --jobs 4 --json _output/report.jsonl

Exit codes: 0 when every row matches, 1 on a mismatch, 2 on usage errors (including
unknown cases and parameters), 3 when a Groebner cap or the memory cap is hit.

Environment: ``PARAGEOM_CAP_MB`` caps the address space, ``PARAGEOM_SEED`` and
``PARAGEOM_JOBS`` give the defaults for ``--seed`` and ``--jobs``.
"""

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

sys.path.insert(1, "./src/")

import catalog
import reports
from exact import ResourceCapError

SUBCOMMANDS = (
    "cohomology", "brackets", "extend", "jacobi", "identify", "symbol", "geometry",
    "report-all", "catalog",
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def log(message):
    print(f"[parageom] {message}", file=sys.stderr)


def parse_params(text):
    """``"l=3/2"`` or ``"r=0,t=3"`` into a dict of strings."""
    params = {}
    if not text:
        return params
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep or not key.strip() or not value.strip():
            raise catalog.UnknownCaseError(f"malformed parameter {part!r}; expected key=value")
        params[key.strip()] = value.strip()
    return params


def apply_memory_cap(megabytes=None):
    """``RLIMIT_AS`` from ``PARAGEOM_CAP_MB``; a no-op where ``resource`` is missing."""
    megabytes = megabytes or os.environ.get("PARAGEOM_CAP_MB", "")
    if not megabytes:
        return None
    try:
        import resource
    except ImportError:
        log("memory cap ignored: the resource module is unavailable")
        return None
    limit = int(megabytes) * 1024 * 1024
    resource.setrlimit(resource.RLIMIT_AS, (limit, limit))
    return limit


def parse_args(argv=None):
    parser = argparse.ArgumentParser(
        prog="parageom", description="Exact verification reports for para-complex 6D structures."
    )
    parser.add_argument("command", choices=SUBCOMMANDS)
    parser.add_argument("--case", help=f"Case name, one of: {', '.join(catalog.CASE_NAMES)}")
    parser.add_argument("--params", default="", help="Parameter bindings, e.g. l=3/2 or r=0,t=3")
    parser.add_argument("--json", type=Path, default=None, help="Also write the JSON lines to PATH")
    parser.add_argument(
        "--seed", type=int, default=int(os.environ.get("PARAGEOM_SEED", "0")),
        help="Seed for sampled checks (default: PARAGEOM_SEED or 0)",
    )
    parser.add_argument(
        "--jobs", type=int, default=int(os.environ.get("PARAGEOM_JOBS", "1")),
        help="Worker processes for report-all (default: PARAGEOM_JOBS or 1)",
    )
    parser.add_argument("--pretty", action="store_true", help="Print a table instead of JSON lines")
    return parser.parse_args(argv)


def run_units(units, seed, jobs):
    """Rows of every unit, collected in unit order whatever the worker count."""
    if jobs <= 1:
        batches = []
        for unit in units:
            batches.append(reports.run_unit(unit, seed))
            log(f"{unit[1]} {unit[2] or ''}: {len(batches[-1])} rows")
        return [row for batch in batches for row in batch]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(reports.run_unit, unit, seed) for unit in units]
        batches = []
        for unit, future in zip(units, futures):
            batches.append(future.result())
            log(f"{unit[1]} {unit[2] or ''}: {len(batches[-1])} rows")
    return [row for batch in batches for row in batch]


def resolve(args):
    """The case of a single-case subcommand; raises ``UnknownCaseError`` on bad input."""
    if args.command == "report-all":
        if args.case or args.params:
            raise catalog.UnknownCaseError("report-all takes no --case or --params")
        return None
    if not args.case:
        if args.command == "catalog":
            return None
        raise catalog.UnknownCaseError(f"{args.command} needs --case")
    try:
        return catalog.get_case(args.case, parse_params(args.params))
    except (TypeError, ValueError, ZeroDivisionError) as err:
        if isinstance(err, catalog.UnknownCaseError):
            raise
        raise catalog.UnknownCaseError(f"bad parameters {args.params!r}: {err}") from err


def collect(args, case):
    if args.command == "report-all":
        return reports.sort_rows(run_units(reports.report_units(args.seed), args.seed, args.jobs))
    rows = reports.case_rows(case, (args.command,), args.seed)
    if not rows:
        log(f"no {args.command} rows for case {args.case}")
    return reports.sort_rows(rows)


def export_catalog(case):
    cases = [case] if case is not None else list(catalog.all_cases())
    return [reports.canonical_json(c.to_json()) for c in cases]


def render(rows, pretty):
    if pretty:
        import pandas as pd

        df = pd.DataFrame([row.to_record() for row in rows])
        if df.empty:
            return []
        df = df[["case", "operation", "inputs", "outputs", "match"]]
        return [df.to_string(index=False)]
    return [reports.canonical_json(row.to_json()) for row in rows]


def write_jsonl(lines, path):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def main(argv=None):
    try:
        args = parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code else EXIT_OK
    try:
        case = resolve(args)
    except catalog.UnknownCaseError as err:
        log(f"usage error: {err}")
        return EXIT_USAGE
    try:
        apply_memory_cap()
        if args.command == "catalog":
            lines = export_catalog(case)
            rows = None
        else:
            rows = collect(args, case)
    except (ResourceCapError, MemoryError) as err:
        log(f"resource cap: {err}")
        return EXIT_RESOURCE
    if rows is None:
        if args.json is not None:
            write_jsonl(lines, args.json)
        print("\n".join(lines))
        return EXIT_OK
    if args.json is not None:
        write_jsonl(render(rows, False), args.json)
    for line in render(rows, args.pretty):
        print(line)
    failed = [row for row in rows if not row.match]
    for row in failed:
        log(f"mismatch: {row.case} {row.operation} {reports.canonical_json(row.inputs)}")
    log(f"{len(rows)} rows, {len(failed)} mismatches")
    return EXIT_MISMATCH if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
