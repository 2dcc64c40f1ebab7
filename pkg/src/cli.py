#!/usr/bin/env python3
"""Main entry point: run a worksheet and print its report."""

import argparse
import logging
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

import jsonschema

from config import load_settings
from dsl.execute import execute
from dsl.parser import parse
from errors import ScriptError
from render import render_json, render_text, write_output

logger = logging.getLogger("transfers.cli")

EXIT_PASS, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Compose correspondences and compute transfers")
    parser.add_argument("--input", type=Path, help="Worksheet file (default: stdin)")
    parser.add_argument("--json", action="store_true", help="Print the machine-readable report")
    parser.add_argument("--seed", type=int, help="Seed for generated instances (default 0)")
    parser.add_argument("--max-degree", type=int, help="Symmetric-power cross-check threshold (default 6)")
    parser.add_argument("--check-irreducibility", choices=("on", "off", "auto"),
                        help="Verify minimal polynomials of declared fields (default auto)")
    parser.add_argument("--settings", type=Path, help="Settings file (default settings/defaults.yaml)")
    parser.add_argument("--out", type=Path, help="Also write the report to this file")
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr")
    return parser


def run(args: argparse.Namespace) -> int:
    overrides = {
        "seed": args.seed,
        "max_degree": args.max_degree,
        "check_irreducibility": args.check_irreducibility,
    }
    try:
        settings = load_settings(args.settings, overrides)
    except (FileNotFoundError, jsonschema.ValidationError) as e:
        logger.error("Invalid settings: %s", e)
        return EXIT_INVALID

    if args.input:
        try:
            text = args.input.read_text(encoding="utf-8")
        except OSError as e:
            logger.error("Cannot read %s: %s", args.input, e)
            return EXIT_INVALID
    else:
        text = sys.stdin.read()

    try:
        report = execute(parse(text), settings)
    except ScriptError as e:
        logger.error("%s: %s", args.input or "<stdin>", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID

    output = render_json(report) if args.json else render_text(report)
    sys.stdout.write(output)
    if args.out:
        write_output(output, args.out)
    return EXIT_FAIL if report.failed else EXIT_PASS


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s [%(name)s] %(levelname)s: %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
