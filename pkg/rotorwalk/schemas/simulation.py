"""Simulation result schemas"""
from typing import Dict, List, Optional

from pydantic import Field, computed_field

from rotorwalk.schemas.base import BaseSchema


class SimulationReport(BaseSchema):
    """Transfinite rotor-router run on one wired tree"""
    n: int = Field(..., description="Particles launched")
    escapes: List[int] = Field(..., description="Cumulative up-absorptions E_1..E_n")
    height: int
    seed: Optional[int] = None
    down_count: int
    leaf_hits: Dict[int, int] = Field(default_factory=dict, description="Up-absorptions per leaf id")

    @computed_field
    @property
    def escaped(self) -> int:
        return self.escapes[-1] if self.escapes else 0

    @computed_field
    @property
    def ratio(self) -> float:
        return self.escaped / self.n if self.n else 0.0


class HeightSweep(BaseSchema):
    """E_n over increasing heights for one seed-derived configuration"""
    seed: int
    n: int
    heights: List[int]
    escaped: List[int]
    monotone: bool
    stabilized_height: Optional[int] = None


class SrwEstimate(BaseSchema):
    """Monte Carlo estimate of the simple-random-walk up-absorption probability"""
    walks: int
    up_fraction: float = Field(..., ge=0, le=1)
    half_width: float = Field(..., ge=0)
    height: int
    seed: int


class OracleCheck(BaseSchema):
    """One exhaustive or randomised oracle"""
    name: str
    checked: int
    passed: int
    detail: str = ""

    @computed_field
    @property
    def ok(self) -> bool:
        return self.checked == self.passed


class OracleSummary(BaseSchema):
    """All oracle checks for one tree"""
    root_type: int
    height: int
    checks: List[OracleCheck]

    @computed_field
    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)
