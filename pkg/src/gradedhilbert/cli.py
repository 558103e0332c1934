"""Command-line front end.

Exit codes: 0 ok, 1 usage error, 2 capacity/feasibility error, 3 verification
mismatch, 4 not enough coefficients for the requested analysis.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, constructions, engine
from .errors import (
    CapacityError,
    DataShortageError,
    HilbertError,
    InfeasibleError,
    SizeGuardError,
)
from .powseries import SeriesSpec, generate, parse_coeff_text, parse_series_spec
from .presentations import ConstructionSpec, Variant, parse_presentation

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_MISMATCH = 3
EXIT_SHORTAGE = 4

ENGINES = {
    "auto": None,
    "automaton": ("closed", "automaton"),
    "bruteforce": ("closed", "bruteforce"),
    "structured": ("closed", "structured"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _series(text):
    return parse_series_spec(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gradedhilbert",
                     description="Hilbert series of monomial and graded algebras.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    out = _Parser(add_help=False)
    out.add_argument("--format", choices=("plain", "table", "csv", "json"), default="plain",
                     help="coefficient output format (plain: one comma-separated line)")
    out.add_argument("--output", type=Path, help="write to this file instead of stdout")

    p = sub.add_parser("expand", parents=[out], help="print coefficients of a series")
    p.add_argument("--series", required=True)
    p.add_argument("--max-degree", type=_nonneg_int, required=True)

    construct = _Parser(add_help=False)
    construct.add_argument("--variant", required=True, choices=[v.value for v in Variant])
    construct.add_argument("--d", type=int, required=True)
    construct.add_argument("--p", type=int, default=2)
    construct.add_argument("--q", type=int, default=0)
    construct.add_argument("--series", required=True)
    construct.add_argument("--max-degree", type=_nonneg_int, required=True)

    sub.add_parser("construct", parents=[construct, out],
                   help="closed-form Hilbert series of a construction")
    p = sub.add_parser("verify", parents=[construct, out],
                       help="cross-check the counting methods (exit 3 on mismatch)")
    p.add_argument("--engine", choices=tuple(ENGINES), default="auto")

    p = sub.add_parser("rationalize", parents=[out],
                       help="rational Hilbert series of a finite presentation")
    p.add_argument("--presentation", type=Path, required=True)

    p = sub.add_parser("analyze", parents=[out], help="growth and rationality verdict (JSON)")
    p.add_argument("--coeffs-file", type=Path, required=True)
    p.add_argument("--max-order", type=_nonneg_int, default=analysis.DEFAULT_K)
    p.add_argument("--guard", type=_nonneg_int, default=analysis.DEFAULT_G)

    p = sub.add_parser("hr", parents=[out], help="partition numbers vs. Hardy-Ramanujan")
    p.add_argument("--n", type=int, required=True)
    return parser


def format_coeffs(coeffs, fmt: str) -> str:
    coeffs = list(coeffs)
    if fmt == "plain":
        return ",".join(map(str, coeffs))
    if fmt == "csv":
        return "\n".join(["degree,coefficient"] + [f"{n},{c}" for n, c in enumerate(coeffs)])
    if fmt == "json":
        return json.dumps([str(c) for c in coeffs])
    width = max(len(str(len(coeffs) - 1)), len("degree"))
    lines = [f"{'degree':>{width}}  coefficient"]
    lines += [f"{n:>{width}}  {c}" for n, c in enumerate(coeffs)]
    return "\n".join(lines)


def _spec(args) -> ConstructionSpec:
    return ConstructionSpec(Variant(args.variant), args.d, args.p, args.q, _series(args.series))


def _run(args) -> tuple:
    cmd = args.command
    if cmd == "expand":
        coeffs = generate(_series(args.series), args.max_degree)
        return format_coeffs(coeffs, args.format), EXIT_OK
    if cmd == "construct":
        coeffs = constructions.closed_form(_spec(args), args.max_degree)
        return format_coeffs(coeffs, args.format), EXIT_OK
    if cmd == "verify":
        spec = _spec(args)
        methods = ENGINES[args.engine]
        report = constructions.verify(spec, args.max_degree, methods)
        if args.format == "json":
            text = json.dumps({
                "spec": str(spec),
                "N": report.N,
                "vectors": {k: [str(c) for c in v] for k, v in report.vectors.items()},
                "agree": report.agree,
                "first_mismatch": report.first_mismatch,
            })
        else:
            text = report.summary()
        return text, EXIT_OK if report.agree else EXIT_MISMATCH
    if cmd == "rationalize":
        pres = parse_presentation(args.presentation.read_text())
        for w in pres.redundant:
            print(f"note: dropped redundant word {' '.join(map(str, w))}", file=sys.stderr)
        return str(engine.rationalize(pres)), EXIT_OK
    if cmd == "analyze":
        coeffs = parse_coeff_text(args.coeffs_file.read_text())
        verdict = analysis.fatou_verdict(coeffs, args.max_order, args.guard)
        return verdict.to_json(), EXIT_OK
    if cmd == "hr":
        if args.n < 1:
            raise UsageError("hr: --n must be >= 1")
        r = analysis.hr_compare(args.n)
        text = (f"n = {r.n}\np_n = {r.exact}\n"
                f"asymptotic = {analysis.mpmath.nstr(r.asymptotic, 20)}\n"
                f"ratio = {analysis.mpmath.nstr(r.ratio, 15)}")
        return text, EXIT_OK
    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = _run(args)
    except UsageError as exc:
        print(str(exc).rstrip(), file=sys.stderr)
        return EXIT_USAGE
    except (CapacityError, InfeasibleError, SizeGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except DataShortageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SHORTAGE
    except (HilbertError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "output", None):
        args.output.write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
