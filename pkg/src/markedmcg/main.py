#!/usr/bin/env python3
"""
markedmcg - Main Entry Point

Batch front-end for classifying marked surfaces, emitting mapping class group
presentations, running the verification suites, computing abelianizations and
mutating exchange matrices. Reports go to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys
from typing import Any, List, Optional, Sequence

from .autgroup import aut_group_descriptor
from .cluster import mutate_matrix
from .constants import DEFAULT_WORKER_COUNT, FAIL_STATUS, SUITE_ALL
from .data_structures import CheckResult, RunConfig
from .logging_config import get_logger, setup_logging
from .parsing_utils import format_text, load_matrix, load_surface, to_struct
from .presentations import mcg_presentation
from .suite_runner import run_suites
from .suite_utils import SUITE_MODULES
from .surface import classify
from .words import abelianization

OUTPUT_FORMATS = ("text", "struct")


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markedmcg",
        description="Mapping class groups and cluster automorphism groups of marked surfaces",
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument(
        "--json", action="store_true", help="Print a structured report instead of text"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("classify", "Print the class of a surface"),
        ("abelianize", "Print the elementary divisors of H1 of the mapping class group"),
        ("descriptor", "Print the summary table row of the cluster automorphism group"),
    ):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("-i", "--input", required=True, help="Surface description file")

    present = commands.add_parser("present", help="Emit the mapping class group presentation")
    present.add_argument("-i", "--input", required=True, help="Surface description file")
    present.add_argument("--format", choices=OUTPUT_FORMATS, default="text")

    verify = commands.add_parser("verify", help="Run verification suites")
    verify.add_argument(
        "--suite",
        action="append",
        choices=[SUITE_ALL, *SUITE_MODULES],
        help="Suite to run; repeatable, defaults to all",
    )
    verify.add_argument("--max-n", type=positive_int)
    verify.add_argument("--samples", type=positive_int)
    verify.add_argument("--rng-seed", type=int)
    verify.add_argument("--limit", type=positive_int, help="Coset enumeration limit")
    verify.add_argument("--depth", type=positive_int, help="Exploration depth")
    verify.add_argument("--workers", type=positive_int, default=DEFAULT_WORKER_COUNT)

    mutate = commands.add_parser("mutate", help="Mutate an exchange matrix")
    mutate.add_argument(
        "-B", "--matrix", required=True, help="Matrix file, or inline JSON like [[0,1],[-1,0]]"
    )
    mutate.add_argument(
        "-k", dest="mutations", type=positive_int, action="append", required=True,
        help="1-based mutation index; repeat to mutate along a path",
    )

    commands.add_parser("fourpunct-check", help="Run the 4-punctured sphere checks")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        matrix=getattr(args, "matrix", None),
        mutations=tuple(getattr(args, "mutations", None) or ()),
        output_format=getattr(args, "format", "text"),
        suites=tuple(getattr(args, "suite", None) or (SUITE_ALL,)),
        max_n=getattr(args, "max_n", None),
        samples=getattr(args, "samples", None),
        rng_seed=getattr(args, "rng_seed", None),
        limit=getattr(args, "limit", None),
        depth=getattr(args, "depth", None),
        workers=getattr(args, "workers", DEFAULT_WORKER_COUNT),
        json_report=args.json,
    )


def _emit(config: RunConfig, text: str, data: Any) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False) if config.json_report else text)


def _report(config: RunConfig, results: List[CheckResult]) -> int:
    logger = get_logger(__name__)
    passed = all(r.passed for r in results)
    if config.json_report:
        _emit(config, "", {"passed": passed, "results": [r.to_dict() for r in results]})
    else:
        for r in results:
            print(r.format_line())
    if not passed:
        first = next(r for r in results if not r.passed)
        logger.error(f"First failing check: {first.format_line()}")
    return 0 if passed else 1


def run(config: RunConfig) -> int:
    """Execute one command and return the exit status.

    Raises:
        ValueError, KeyError, OSError: Propagated from the loaders and builders
    """
    if config.command == "classify":
        s = load_surface(config.input_path or "")
        surface_class = classify(s)
        _emit(config, str(surface_class), {"surface": s.to_dict(), "class": str(surface_class)})
    elif config.command == "present":
        p = mcg_presentation(load_surface(config.input_path or ""))
        if config.output_format == "struct":
            print(json.dumps(to_struct(p), indent=2 if config.json_report else None))
        else:
            _emit(config, format_text(p).rstrip("\n"), to_struct(p))
    elif config.command == "abelianize":
        s = load_surface(config.input_path or "")
        divisors = abelianization(mcg_presentation(s))
        _emit(config, json.dumps(divisors), {"surface": s.to_dict(), "divisors": divisors})
    elif config.command == "descriptor":
        descriptor = aut_group_descriptor(load_surface(config.input_path or ""))
        _emit(config, descriptor.format_row(), descriptor.to_dict())
    elif config.command == "mutate":
        matrix = load_matrix(config.matrix or "")
        for k in config.mutations:
            matrix = mutate_matrix(matrix, k)
        rows = matrix.tolist()
        _emit(config, json.dumps(rows), {"mutations": list(config.mutations), "matrix": rows})
    elif config.command == "verify":
        results = run_suites(config.suites, config.overrides(), config.workers)
        return _report(config, results)
    elif config.command == "fourpunct-check":
        return _report(config, run_suites(["fourpunct"], workers=1))
    else:
        raise ValueError(f"Unknown command '{config.command}'")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Main entry point for the command-line front-end."""
    parser = build_parser()
    args = parser.parse_args(argv)

    log_level = "DEBUG" if args.debug else "WARNING"
    setup_logging(log_level=log_level)

    logger = get_logger(__name__)
    logger.info(f"Running command {args.command}")

    config = config_from_args(args)
    try:
        status = run(config)
    except (ValueError, LookupError, TypeError, OSError) as e:
        logger.error(f"Command {config.command} failed: {e}")
        print(f"{FAIL_STATUS} {config.command} {e}")
        status = 1
    sys.exit(status)


if __name__ == "__main__":
    main()
