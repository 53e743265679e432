"""Enumeration types for domain models"""
from enum import Enum


class Verdict(str, Enum):
    """Recurrence classification of the rotor walk"""
    RECURRENT = "recurrent"
    TRANSIENT = "transient"


class NumericField(str, Enum):
    """Arithmetic the probabilities are carried in"""
    EXACT = "exact"
    FLOAT = "float"


class Absorption(str, Enum):
    """Sink that absorbed a particle"""
    DOWN = "down"
    UP = "up"


class Schedule(str, Enum):
    """Interleaving rule for concurrently active particles"""
    SEQUENTIAL = "sequential"
    ROUND_ROBIN = "round_robin"
    RANDOM = "random"
    DEPTH_PRIORITY = "depth_priority"


class OutputFormat(str, Enum):
    """Report output formats"""
    JSON = "json"
    CSV = "csv"
