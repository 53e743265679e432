"""Pydantic schemas for configuration and reports"""
from rotorwalk.schemas.analysis import ClassificationResult, SurvivalEstimate, ValidationReport
from rotorwalk.schemas.experiment import ExperimentConfig
from rotorwalk.schemas.simulation import (
    HeightSweep, OracleCheck, OracleSummary, SimulationReport, SrwEstimate
)

__all__ = [
    "ClassificationResult", "SurvivalEstimate", "ValidationReport",
    "ExperimentConfig",
    "HeightSweep", "OracleCheck", "OracleSummary", "SimulationReport", "SrwEstimate",
]
