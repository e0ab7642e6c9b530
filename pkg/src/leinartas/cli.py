"""Command-line driver.

Exit codes: 0 success, 1 parse or usage error, 2 mathematical domain error
(zero denominator, factor-product mismatch), 3 verification failure under
--verify.  Diagnostics go to stderr only; documents go to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .decompose import leinartas_decompose, normalize, verify
from .errors import DomainError, ParseError
from .parser import parse_expression, parse_polynomial
from .polynomial import VariableContext
from .render import FORMATS, render

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage problems; the exit-code contract
    # reserves 2 for domain errors, so route usage problems through 1.
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="leinartas",
        description="Exact multivariate partial fraction decomposition over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    dec = sub.add_parser(
        "decompose",
        help="decompose one expression or a batch file",
        description=(
            "Split a rational expression into summands whose denominator "
            "factors share a common zero and are algebraically independent."
        ),
    )
    dec.add_argument("expression", nargs="?", help="expression text, e.g. '(X+Y)/(X*Y)'")
    dec.add_argument(
        "--input",
        metavar="FILE",
        help="read expressions from FILE, one per line; '#' starts a comment",
    )
    dec.add_argument(
        "--vars",
        required=True,
        metavar="NAMES",
        help="comma-separated variable names; the order fixes the term order",
    )
    dec.add_argument(
        "--factor",
        action="append",
        default=[],
        metavar="POLY:EXP",
        help="denominator factor with exponent; repeat for several factors",
    )
    dec.add_argument("--format", choices=FORMATS, default="text")
    dec.add_argument(
        "--verify",
        action="store_true",
        help="append a verification report; exit 3 if it fails",
    )
    dec.add_argument(
        "--certificates",
        action="store_true",
        help="include the certificate log in the output",
    )
    dec.add_argument(
        "--normalize",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="merge equal denominators and reduce numerators by division",
    )
    return parser


def _parse_factor(spec: str, context: VariableContext):
    text, sep, exp = spec.rpartition(":")
    if not sep or not text:
        raise ParseError(f"factor must look like POLY:EXP, got {spec!r}", 0)
    try:
        exponent = int(exp)
    except ValueError:
        raise ParseError(f"factor exponent {exp!r} is not an integer", 0) from None
    if exponent < 1:
        raise ParseError("factor exponents must be positive", 0)
    poly = parse_polynomial(text, context)
    return poly, exponent


def _process(source: str, names, args) -> tuple[str, bool]:
    parsed = parse_expression(source, names)
    if args.factor:
        factors = tuple(_parse_factor(spec, parsed.variables) for spec in args.factor)
        parsed = replace(parsed, supplied_factors=factors)
    dec = leinartas_decompose(parsed.expression, parsed.supplied_factors)
    if args.normalize:
        dec = normalize(dec)
    report = verify(dec) if args.verify else None
    doc = render(dec, report, args.format, args.certificates)
    return doc.payload, report is None or report.overall


def _read_batch(path: str) -> list[tuple[str, str]]:
    with open(path, encoding="utf-8") as handle:
        raw = handle.read().splitlines()
    sources = []
    for lineno, line in enumerate(raw, start=1):
        text = line.split("#", 1)[0].strip()
        if text:
            sources.append((f"line {lineno}", text))
    return sources


def run(argv=None) -> int:
    """Parse arguments, process expressions, and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    names = [n.strip() for n in args.vars.split(",") if n.strip()]
    try:
        VariableContext(names)
    except ValueError as exc:
        print(f"error: --vars: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.input is not None and args.expression is not None:
        print("error: give an expression or --input, not both", file=sys.stderr)
        return EXIT_USAGE
    if args.input is not None:
        if args.factor:
            print("error: --factor applies to a single expression", file=sys.stderr)
            return EXIT_USAGE
        try:
            sources = _read_batch(args.input)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        batch = True
    elif args.expression is not None:
        sources = [("expression", args.expression)]
        batch = False
    else:
        print("error: an expression or --input is required", file=sys.stderr)
        return EXIT_USAGE

    blocks = []
    all_verified = True
    for label, text in sources:
        try:
            payload, ok = _process(text, names, args)
        except ParseError as exc:
            print(f"error: {label}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except DomainError as exc:
            print(f"error: {label}: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        except ValueError as exc:
            print(f"error: {label}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        all_verified = all_verified and ok
        blocks.append((label, text, payload))

    out = sys.stdout
    if not batch:
        print(blocks[0][2], file=out)
    elif args.format == "json":
        # One compact document per input line, in input order.
        for _, _, payload in blocks:
            print(json.dumps(json.loads(payload), separators=(",", ":")), file=out)
    else:
        for label, text, payload in blocks:
            print(f"== {label}: {text}", file=out)
            print(payload, file=out)
            print(file=out)
    return EXIT_OK if all_verified else EXIT_VERIFY


def main() -> None:  # pragma: no cover - console entry point
    sys.exit(run())
