"""Command line entry point: ``hh1solve analyze --input FILE --prime P``."""

from __future__ import annotations

import argparse
import logging
import sys

from .groups import CapExceededError
from .report import analyze, emit
from .spec import SpecError, parse_spec

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3

log = logging.getLogger("hh1solve")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hh1solve", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="decide solvability of HH^1(kG) for one group")
    a.add_argument("--input", required=True, help="JSON group description ('-' for stdin)")
    a.add_argument("--prime", required=True, type=int, help="characteristic p of k")
    a.add_argument("--full-oracle", action="store_true",
                   help="also solve for Der(kG) directly (|G| <= 32)")
    a.add_argument("--emit-dot", metavar="DIR", help="write gamma.dot, gamma_reduced.dot (and gamma2.dot)")
    a.add_argument("--format", choices=["json", "text"], default="json")
    a.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        spec = parse_spec(text)
        log.info("analyzing %s at p=%d", spec.describe(), args.prime)
        report = analyze(spec, args.prime, full_oracle=args.full_oracle)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(emit(report, args.format, dot_dir=args.emit_dot))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
