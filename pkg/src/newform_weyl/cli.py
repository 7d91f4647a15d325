"""Command line interface.

Subcommands:

* ``coeffs M``  -- exact and numeric main-term coefficients at one level
* ``scan``      -- classify all levels up to a bound
* ``verify``    -- run the oracle cross-check suites
* ``weyl M``    -- numeric main-term breakdown at an eigenvalue cutoff

All results go to stdout, diagnostics to stderr.  Identical invocations
produce byte-identical output.  Exit codes: 0 success, 1 verification
failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

import mpmath as mp

from .exactnum import MAX_EVAL_DIGITS, SymbolicCoefficient, numeric_eval
from .sieve import FACTOR_BOUND, SIEVE_BOUND_ENV
from .spectral import (
    CoefficientTriple,
    Level,
    classify_cocompact,
    full_level_coeffs,
    newform_coeffs,
    weyl_main_terms,
)
from .verification import run_suite

MAX_SCAN = 10**6

__all__ = ["main"]


def _nstr(x, precision: int) -> str:
    return mp.nstr(mp.mpf(x), precision, strip_zeros=False)


def _frac_numeric(q: Fraction, precision: int) -> str:
    with mp.workdps(precision + 10):
        return _nstr(mp.mpf(q.numerator) / q.denominator, precision)


def _sym_numeric(x: SymbolicCoefficient, precision: int) -> str:
    return _nstr(numeric_eval(x, precision), precision)


def _logs_field(x: SymbolicCoefficient) -> str:
    return ";".join(f"{p}:{c}" for p, c in x.logs.terms)


def _coeff_record(triple: CoefficientTriple, precision: int) -> dict:
    cls = classify_cocompact(triple.level, method="oracle")
    return {
        "level": triple.level,
        "kind": triple.kind,
        "c1": str(triple.c1),
        "c2": triple.c2.to_json_dict(),
        "c3": triple.c3.to_json_dict(),
        "c1_approx": _frac_numeric(triple.c1, precision),
        "c2_approx": _sym_numeric(triple.c2, precision),
        "c3_approx": _sym_numeric(triple.c3, precision),
        "precision": precision,
        "cocompact": cls.verdict,
        "reason": cls.reason,
    }


def _triples(level: int, kind: str) -> list[CoefficientTriple]:
    out = []
    if kind in ("full", "both"):
        out.append(full_level_coeffs(level))
    if kind in ("newform", "both"):
        out.append(newform_coeffs(level))
    return out


def cmd_coeffs(args: argparse.Namespace) -> int:
    triples = _triples(args.level, args.kind)
    records = [_coeff_record(t, args.precision) for t in triples]
    if args.format == "json":
        payload = records[0] if len(records) == 1 else records
        print(json.dumps(payload, indent=2))
        return 0
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            [
                "level", "kind", "c1",
                "c2_const", "c2_log_pi", "c2_logs",
                "c3_const", "c3_log_pi", "c3_logs",
                "c1_approx", "c2_approx", "c3_approx",
                "cocompact", "reason",
            ]
        )
        for t, r in zip(triples, records):
            writer.writerow(
                [
                    r["level"], r["kind"], r["c1"],
                    str(t.c2.const), str(t.c2.log_pi), _logs_field(t.c2),
                    str(t.c3.const), str(t.c3.log_pi), _logs_field(t.c3),
                    r["c1_approx"], r["c2_approx"], r["c3_approx"],
                    str(r["cocompact"]).lower(), r["reason"],
                ]
            )
        return 0
    for t, r in zip(triples, records):
        print(f"level {r['level']} ({r['kind']})")
        print(f"  c1 = {t.c1}")
        print(f"  c2 = {t.c2}")
        print(f"  c3 = {t.c3}")
        print(f"  c1 ~ {r['c1_approx']}")
        print(f"  c2 ~ {r['c2_approx']}")
        print(f"  c3 ~ {r['c3_approx']}")
        verdict = "cocompact type" if r["cocompact"] else "not of cocompact type"
        print(f"  classification: {verdict} ({r['reason']})")
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    rows = []
    for m in range(1, args.max + 1):
        lv = Level.of(m)
        cls = classify_cocompact(lv, method="theorem")
        if args.only_cocompact and not cls.verdict:
            continue
        rows.append(
            (m, lv.square_part, lv.squarefree_part,
             str(cls.verdict).lower(), cls.reason)
        )
    header = ("level", "square_part", "squarefree_part", "cocompact", "reason")
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return 0
    widths = [max(len(str(r[i])) for r in rows + [header]) for i in range(5)] if rows \
        else [len(h) for h in header]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for r in rows:
        print("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, args.max)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = f": {r.detail}" if r.detail else ""
        print(f"{status} {r.name} (checked {r.checked}){detail}")
        for note in r.notes:
            print(f"  note: {note}")
        if not r.passed:
            failed += 1
    total = len(results)
    print(f"suite {args.suite}: {total - failed}/{total} checks passed")
    return 0 if failed == 0 else 1


def cmd_weyl(args: argparse.Namespace) -> int:
    triple = _triples(args.level, args.kind)[0]
    terms = weyl_main_terms(triple, args.lam)
    p = args.precision
    print(f"level {triple.level} ({triple.kind}), lambda = {args.lam:g}")
    print(f"  c1*lambda                        = {_nstr(terms.area_term, p)}")
    print(f"  c2*sqrt(lambda)*log sqrt(lambda) = {_nstr(terms.cusp_log_term, p)}")
    print(f"  c3*sqrt(lambda)                  = {_nstr(terms.scattering_term, p)}")
    print(f"  main terms total                 = {_nstr(terms.total, p)}")
    print(f"  error scale sqrt(lambda)/log sqrt(lambda) = {_nstr(terms.error_scale, p)}")
    return 0


def _positive_level(text: str) -> int:
    value = int(text)
    if not 1 <= value <= FACTOR_BOUND:
        raise argparse.ArgumentTypeError(f"level must lie in [1, {FACTOR_BOUND}]")
    return value


def _precision(text: str) -> int:
    value = int(text)
    if not 1 <= value <= MAX_EVAL_DIGITS:
        raise argparse.ArgumentTypeError(
            f"precision must lie in [1, {MAX_EVAL_DIGITS}]"
        )
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newform-weyl",
        description=(
            "Exact Weyl-law main-term coefficients for Maass newform counting "
            "functions on Hecke congruence groups."
        ),
        epilog=(
            f"The factorization sieve bound can be overridden through the "
            f"{SIEVE_BOUND_ENV} environment variable."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeffs = sub.add_parser(
        "coeffs", help="exact and numeric coefficients at one level"
    )
    p_coeffs.add_argument("level", type=_positive_level)
    p_coeffs.add_argument(
        "--kind", choices=("full", "newform", "both"), default="newform"
    )
    p_coeffs.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_coeffs.add_argument("--precision", type=_precision, default=12)
    p_coeffs.set_defaults(func=cmd_coeffs)

    p_scan = sub.add_parser("scan", help="classify all levels up to a bound")
    p_scan.add_argument("--max", type=int, required=True)
    p_scan.add_argument("--only-cocompact", action="store_true")
    p_scan.add_argument("--format", choices=("text", "csv"), default="text")
    p_scan.set_defaults(func=cmd_scan)

    p_verify = sub.add_parser("verify", help="run the oracle cross-check suites")
    p_verify.add_argument(
        "--suite",
        choices=("group", "closed-forms", "classifier", "dirichlet-series", "all"),
        default="all",
    )
    p_verify.add_argument(
        "--max",
        type=int,
        default=None,
        help="override the level-scan depth of the suite",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_weyl = sub.add_parser("weyl", help="numeric main terms at a cutoff")
    p_weyl.add_argument("level", type=_positive_level)
    p_weyl.add_argument(
        "--lambda", dest="lam", type=float, required=True,
        help="eigenvalue cutoff, must be > 1",
    )
    p_weyl.add_argument("--kind", choices=("full", "newform"), default="newform")
    p_weyl.add_argument("--precision", type=_precision, default=12)
    p_weyl.set_defaults(func=cmd_weyl)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "scan" and not 1 <= args.max <= MAX_SCAN:
        parser.error(f"--max must lie in [1, {MAX_SCAN}]")
    if args.command == "verify" and args.max is not None and args.max < 1:
        parser.error("--max must be positive")
    if args.command == "weyl" and args.lam <= 1:
        parser.error("--lambda must be > 1")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
