"""Experiment configuration schema"""
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

Probability = Union[int, float, str]


class ExperimentConfig(BaseModel):
    """
    Resolved experiment configuration.

    Types in `children` and `root` are 1-based. `dists` is either the keyword
    "uniform" or one probability row per type; rows of "p/q" strings select
    exact rational arithmetic.
    """
    model_config = ConfigDict(extra="forbid")

    m: int = Field(..., ge=1, description="Number of vertex types")
    children: List[List[int]] = Field(..., description="Ordered child types per type (generation function)")
    dists: Union[Literal["uniform"], List[List[Probability]]] = Field(..., description="Rotor distributions")
    root: int = Field(..., ge=1, description="Root type")
    heights: List[int] = Field(default_factory=lambda: [10], min_length=1)
    particles: int = Field(100, ge=1)
    samples: int = Field(1000, ge=1)
    seed: Optional[int] = Field(None, ge=0, lt=2**64)
    tol: Optional[float] = Field(None, gt=0)
