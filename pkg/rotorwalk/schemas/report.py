"""Command report schemas"""
from typing import List, Optional

from pydantic import Field

from rotorwalk.models.enums import Verdict
from rotorwalk.schemas.analysis import ClassificationResult, SurvivalEstimate, ValidationReport
from rotorwalk.schemas.base import BaseSchema
from rotorwalk.schemas.experiment import ExperimentConfig
from rotorwalk.schemas.simulation import HeightSweep, OracleSummary, SimulationReport, SrwEstimate


class CommandReport(BaseSchema):
    """Every report carries the command and the fully resolved configuration"""
    command: str
    config: ExperimentConfig


class ValidateReport(CommandReport):
    validation: ValidationReport


class ClassifyReport(CommandReport):
    moment_matrix: List[List[str]] = Field(..., description="M(𝒟); exact entries as \"p/q\"")
    classification: ClassificationResult


class EscapeReport(CommandReport):
    escape_probabilities: List[float] = Field(..., description="ℰ_i per type")
    residual: float = Field(..., description="Sup-norm residual of the fixed-point equation")


class LevelRow(BaseSchema):
    n: int
    counts: List[List[int]] = Field(..., description="w(n) = D^n")
    totals: List[int] = Field(..., description="w_i(n) per root type")


class LevelsReport(CommandReport):
    levels: List[LevelRow]


class SimulationRow(BaseSchema):
    """One CSV row of the simulate command"""
    h: int
    n: int
    E_n: int
    ratio: float
    escape_prob: float
    verdict: Verdict
    seed: int


class SimulateReport(CommandReport):
    rows: List[SimulationRow]
    runs: List[SimulationReport]
    sweep: HeightSweep
    classification: ClassificationResult


class MbpReport(CommandReport):
    survival: SurvivalEstimate
    expected_population: List[float] = Field(..., description="(M^depth 1)_i, an upper bound on survival")


class OracleReport(CommandReport):
    summary: OracleSummary


class SrwReport(CommandReport):
    estimates: List[SrwEstimate]
    escape_probability: float


class EmbeddingRow(BaseSchema):
    children: List[List[int]]
    moment_matrix: List[List[str]]
    classification: ClassificationResult


class EmbeddingsReport(CommandReport):
    embeddings: List[EmbeddingRow]


class TreeReport(CommandReport):
    height: int
    node_count: int
    leaf_count: int
    edges_written: Optional[str] = Field(None, description="Path of the edge-list file, if one was written")
