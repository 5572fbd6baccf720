"""Command-line front end.

Commands: motive (one class), series (a table of classes up to a degree),
verify (oracle suites), selftest (module invariants).  Output is either a
human-readable table or line-delimited JSON records; records are canonical
(sorted keys, no whitespace) so identical inputs give byte-identical output
regardless of the thread count.

Exit codes: 0 success, 1 verification/selftest failure, 2 usage or input
errors, 3 polynomiality violation inside the engine.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fflab, verify
from .engine import PolynomialityError, betti_report, motive_class, motive_table
from .lrat import format_poly
from .quiver import BUILTIN_QUIVERS, Quiver, QuiverFormatError, parse_quiver


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise QuiverFormatError(f"{flag} expects a comma-separated integer list, got {text!r}") from None


def _load_quiver(spec: str) -> tuple[Quiver, dict]:
    if spec in BUILTIN_QUIVERS:
        return BUILTIN_QUIVERS[spec], {}
    path = Path(spec)
    if not path.exists():
        raise QuiverFormatError(f"quiver spec not found: {spec} (not a file or builtin name)")
    return parse_quiver(path.read_text(encoding="utf-8"))


def _resolve_vector(args_value: str | None, named: dict, key: str, flag: str) -> tuple[int, ...] | None:
    if args_value is not None:
        return _parse_int_list(args_value, flag)
    return named.get(key)


def _emit_record(record: dict) -> None:
    print(json.dumps(record, sort_keys=True, separators=(",", ":")))


def _motive_record(result) -> dict:
    return {
        "command": "motive",
        "v": list(result.v),
        "w": list(result.w),
        "d": result.d_shift,
        "coefficients": list(result.class_polynomial),
        "class": format_poly(result.class_polynomial),
    }


def cmd_motive(args) -> int:
    qv, named = _load_quiver(args.quiver)
    v = _resolve_vector(args.v, named, "v", "--v")
    w = _resolve_vector(args.w, named, "w", "--w")
    if v is None:
        raise QuiverFormatError("no dimension vector: pass --v or put 'v' in the spec file")
    if w is None:
        raise QuiverFormatError("no framing vector: pass --w or put 'w' in the spec file")
    result = motive_class(qv, v, w, threads=args.threads)
    if args.format == "records":
        record = _motive_record(result)
        record["betti"] = [[k, c] for k, c in betti_report(result)]
        _emit_record(record)
    else:
        print(f"v = {list(result.v)}  w = {list(result.w)}  d = {result.d_shift}")
        print(f"class = {format_poly(result.class_polynomial)}")
    return 0


def cmd_series(args) -> int:
    qv, named = _load_quiver(args.quiver)
    w = _resolve_vector(args.w, named, "w", "--w")
    if w is None:
        raise QuiverFormatError("no framing vector: pass --w or put 'w' in the spec file")
    bound = args.max_degree if args.max_degree is not None else named.get("max_degree")
    if bound is None:
        raise QuiverFormatError("no degree bound: pass --max-degree or put 'max_degree' in the spec file")
    rows = motive_table(qv, w, bound, threads=args.threads)
    if args.format == "records":
        for row in rows:
            record = _motive_record(row)
            record["command"] = "series"
            _emit_record(record)
    else:
        for row in rows:
            print(
                f"v={list(row.v)}  d={row.d_shift}  class = {format_poly(row.class_polynomial)}"
            )
    return 0


_SUITES = ("ffcount", "centralizer", "kappa", "harmonic", "all")


def cmd_verify(args) -> int:
    qs = _parse_int_list(args.q, "--q") if args.q else (2, 3)
    cases: list[verify.CaseResult] = []
    if args.suite in ("centralizer", "all"):
        cases += verify.centralizer_suite(qs=tuple(q for q in qs if q in (2, 3)) or (2, 3))
    if args.suite in ("kappa", "all"):
        cases += verify.kappa_suite()
    if args.suite in ("harmonic", "all"):
        cases += verify.harmonic_suite(qs=qs)
    if args.suite in ("ffcount", "all"):
        qv, named = _load_quiver(args.quiver)
        w = _resolve_vector(args.w, named, "w", "--w") or (1,) * qv.vertex_count
        cases += verify.ffcount_suite(
            qv,
            label=args.quiver if args.quiver in BUILTIN_QUIVERS else "quiver",
            w=w,
            qs=qs,
            alpha=args.alpha,
            budget=args.budget,
            threads=args.threads,
        )
    return _report_cases(cases, args.format)


def cmd_selftest(args) -> int:
    cases = verify.run_selftest(fast=args.fast)
    return _report_cases(cases, args.format)


def _report_cases(cases: list[verify.CaseResult], fmt: str) -> int:
    tally = {"PASS": 0, "FAIL": 0, "FLAG": 0, "SKIP": 0}
    for case in cases:
        tally[case.status] += 1
        if fmt == "records":
            _emit_record(
                {
                    "command": "verify",
                    "suite": case.suite,
                    "case": case.name,
                    "status": case.status,
                    "detail": case.detail,
                }
            )
        else:
            line = f"{case.status:<4} {case.suite}: {case.name}"
            if case.detail:
                line += f" | {case.detail}"
            print(line)
    if fmt != "records":
        print(
            f"summary: {tally['PASS']} passed, {tally['FAIL']} failed, "
            f"{tally['FLAG']} flagged, {tally['SKIP']} skipped"
        )
    return 1 if tally["FAIL"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivermotive",
        description="Classes of quiver varieties as polynomials in the Lefschetz class L, "
        "with brute-force finite-field verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, quiver_required: bool):
        p.add_argument(
            "--quiver",
            required=quiver_required,
            default="jordan",
            help="path to a quiver spec file, or a builtin name "
            f"({', '.join(sorted(BUILTIN_QUIVERS))})",
        )
        p.add_argument("--format", choices=("human", "records"), default="human")
        p.add_argument("--threads", type=int, default=1, help="worker threads for series assembly")

    p_motive = sub.add_parser("motive", help="class of one quiver variety")
    add_common(p_motive, quiver_required=True)
    p_motive.add_argument("--v", help="dimension vector, comma separated")
    p_motive.add_argument("--w", help="framing vector, comma separated")
    p_motive.set_defaults(func=cmd_motive)

    p_series = sub.add_parser("series", help="classes for all v up to a total degree")
    add_common(p_series, quiver_required=True)
    p_series.add_argument("--w", help="framing vector, comma separated")
    p_series.add_argument("--max-degree", type=int, help="total-degree bound for v")
    p_series.set_defaults(func=cmd_series)

    p_verify = sub.add_parser("verify", help="run oracle verification suites")
    p_verify.add_argument("suite", choices=_SUITES)
    add_common(p_verify, quiver_required=False)
    p_verify.add_argument("--w", help="framing vector for the ffcount suite")
    p_verify.add_argument("--q", help="field sizes, comma separated (default 2,3)")
    p_verify.add_argument("--alpha", type=int, default=1, help="moment-map level (default 1)")
    p_verify.add_argument(
        "--budget", type=int, default=fflab.DEFAULT_BUDGET, help="enumeration point budget"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_selftest = sub.add_parser("selftest", help="run the module invariant battery")
    p_selftest.add_argument("--fast", action="store_true", help="smaller bounds, under ten seconds")
    p_selftest.add_argument("--format", choices=("human", "records"), default="human")
    p_selftest.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QuiverFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolynomialityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, fflab.EnumerationBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
