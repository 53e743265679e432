"""Command-line entry point"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from rotorwalk import __version__
from rotorwalk.commands import analysis, oracle, simulation
from rotorwalk.core.exceptions import ConfigError, RotorWalkError
from rotorwalk.core.logging import configure_logging
from rotorwalk.models.enums import OutputFormat
from rotorwalk.repositories.config_file import ConfigFileRepository
from rotorwalk.repositories.report import render, save_report
from rotorwalk.schemas.report import OracleReport
from rotorwalk.services.experiment import ExperimentService, apply_overrides

log = logging.getLogger(__name__)

ORACLE_FAILED = 1


def height_list(text: str) -> List[int]:
    """argparse type for "10,12,14" """
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def common_options() -> argparse.ArgumentParser:
    """Flags accepted by every subcommand"""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", required=True, help="JSON experiment configuration")
    parser.add_argument("--seed", type=int, help="64-bit seed; required by simulate, mbp and srw")
    parser.add_argument("--out", help="Also write the report (or, for tree, the edge list) to this path")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value,
                        help="Report format for --out (or stdout when --out is absent)")
    heights = parser.add_mutually_exclusive_group()
    heights.add_argument("--height", type=int, help="Single tree height")
    heights.add_argument("--heights", type=height_list, help="Comma-separated tree heights")
    parser.add_argument("--particles", type=int, help="Particles per transfinite run")
    parser.add_argument("--samples", type=int, help="Monte Carlo samples")
    parser.add_argument("--tol", type=float, help="Criticality tolerance")
    parser.add_argument("--verbose", action="store_true", help="DEBUG logging on stderr")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotorwalk",
        description="Recurrence and transience of rotor-router walks on directed covers",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [common_options()]
    analysis.register(subparsers, parents)
    simulation.register(subparsers, parents)
    oracle.register(subparsers, parents)
    return parser


def report_error(exc: RotorWalkError) -> None:
    details = exc.errors if isinstance(exc, ConfigError) else [exc.detail]
    print(json.dumps({"error": type(exc).__name__, "details": details}), file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging("DEBUG" if args.verbose else None)
    output_format = OutputFormat(args.format)
    try:
        config = ConfigFileRepository(args.config).load()
        config = apply_overrides(
            config,
            seed=args.seed,
            heights=[args.height] if args.height is not None else args.heights,
            particles=args.particles,
            samples=args.samples,
            tol=args.tol,
        )
        report = args.handler(ExperimentService(config), args)
        if args.out and not getattr(args, "owns_out", False):
            save_report(report, args.out, output_format)
            sys.stdout.write(render(report))
        else:
            sys.stdout.write(render(report, OutputFormat.JSON if args.out else output_format))
    except RotorWalkError as exc:
        report_error(exc)
        return exc.exit_code
    if isinstance(report, OracleReport) and not report.summary.ok:
        log.warning("Oracle checks failed: %s",
                    ", ".join(check.name for check in report.summary.checks if not check.ok))
        return ORACLE_FAILED
    return 0


if __name__ == "__main__":
    sys.exit(main())
