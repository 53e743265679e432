"""Analytic subcommands"""
import argparse
from typing import List

from rotorwalk.schemas.report import CommandReport
from rotorwalk.services.experiment import ExperimentService

COMMANDS = {
    "validate": "Check the base graph and rotor distributions",
    "classify": "Moment matrix, Perron root and recurrence verdict",
    "escape": "Simple-random-walk escape probabilities per type",
    "levels": "Type census w(n) = D^n at every configured height",
    "embeddings": "Classify every planar embedding of the adjacency matrix",
}


def run_command(service: ExperimentService, args: argparse.Namespace) -> CommandReport:
    return service.run(args.command)


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    for name, help_text in COMMANDS.items():
        parser = subparsers.add_parser(name, parents=parents, help=help_text, description=help_text)
        parser.set_defaults(handler=run_command)
