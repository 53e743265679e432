"""Analysis result schemas"""
from typing import List

from pydantic import Field

from rotorwalk.models.enums import NumericField, Verdict
from rotorwalk.schemas.base import BaseSchema, SeededSchema


class ValidationReport(BaseSchema):
    """Outcome of base-graph validation"""
    ok: bool
    violations: List[str] = Field(default_factory=list)


class ClassificationResult(BaseSchema):
    """Recurrence/transience verdict for a (graph, distributions) pair"""
    spectral_radius: float
    verdict: Verdict
    critical: bool
    positive_regular: bool
    singular: bool
    field: NumericField = NumericField.FLOAT
    exact_critical: bool = Field(False, description="ρ = 1 established in rational arithmetic")


class SurvivalEstimate(SeededSchema):
    """Per-type survival frequencies of the good-children process at a fixed depth"""
    depth: int
    samples: int
    frequencies: List[float] = Field(..., description="Fraction of runs with Z_depth ≠ 0, per root type")
    half_widths: List[float] = Field(..., description="95% binomial half-widths")
    capped: List[int] = Field(..., description="Runs declared surviving because the population cap was hit")
