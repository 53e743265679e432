"""Domain models"""
from rotorwalk.models.base_graph import BaseGraph
from rotorwalk.models.branching import MomentMatrix, OffspringLaw, RotorDistributionFamily
from rotorwalk.models.enums import Absorption, NumericField, OutputFormat, Schedule, Verdict
from rotorwalk.models.rotor import Odometer, RotorConfiguration, WalkOutcome
from rotorwalk.models.tree import NO_NODE, ROOT, CoverTree, TreeArrays

__all__ = [
    "BaseGraph",
    "MomentMatrix",
    "OffspringLaw",
    "RotorDistributionFamily",
    "Absorption",
    "NumericField",
    "OutputFormat",
    "Schedule",
    "Verdict",
    "Odometer",
    "RotorConfiguration",
    "WalkOutcome",
    "NO_NODE",
    "ROOT",
    "CoverTree",
    "TreeArrays",
]
