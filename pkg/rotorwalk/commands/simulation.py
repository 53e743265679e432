"""Stochastic subcommands and tree export"""
import argparse
import logging
from typing import List

from rotorwalk.repositories.report import save_edge_list
from rotorwalk.schemas.report import CommandReport
from rotorwalk.services.experiment import ExperimentService
from rotorwalk.services.tree import edge_list

log = logging.getLogger(__name__)

COMMANDS = {
    "simulate": "Transfinite rotor-router runs over the configured heights",
    "mbp": "Survival frequencies of the good-children branching process",
    "srw": "Monte Carlo simple random walk on the wired cover",
}


def run_command(service: ExperimentService, args: argparse.Namespace) -> CommandReport:
    return service.run(args.command)


def export_tree(service: ExperimentService, args: argparse.Namespace) -> CommandReport:
    """Build the cover; with --out, write its edge list there"""
    report, built = service.tree()
    if args.out:
        written = save_edge_list(edge_list(built), args.out)
        log.info("Wrote %d edges to %s", written, args.out)
        report.edges_written = str(args.out)
    return report


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    for name, help_text in COMMANDS.items():
        parser = subparsers.add_parser(name, parents=parents, help=help_text, description=help_text)
        parser.set_defaults(handler=run_command)
    parser = subparsers.add_parser("tree", parents=parents, help="Build the cover and export its edge list to --out",
                                   description="Build the cover and export its edge list to --out")
    parser.set_defaults(handler=export_tree, owns_out=True)
