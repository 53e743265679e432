"""Oracle subcommand"""
import argparse
from typing import List

from rotorwalk.schemas.report import OracleReport
from rotorwalk.services.experiment import ExperimentService


def run_oracle(service: ExperimentService, args: argparse.Namespace) -> OracleReport:
    return service.oracle()


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    help_text = "First-particle, abelian, n-bound and escape lower-bound oracles"
    parser = subparsers.add_parser("oracle", parents=parents, help=help_text, description=help_text)
    parser.set_defaults(handler=run_oracle)
