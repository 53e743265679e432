"""Application configuration settings"""
from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Numerical tolerances and resource caps loaded from environment variables"""

    # Classification
    CRITICALITY_TOL: float = Field(default=1e-9, gt=0)
    SPECTRAL_TOL: float = Field(default=1e-12, gt=0)
    SPECTRAL_MAX_ITERS: int = Field(default=1_000_000, gt=0)

    # Escape-probability fixed point
    ESCAPE_TOL: float = Field(default=1e-12, gt=0)
    ESCAPE_MAX_ITERS: int = Field(default=1_000_000, gt=0)

    # Rotor distributions must sum to one within this tolerance (float mode)
    DISTRIBUTION_TOL: float = Field(default=1e-12, gt=0)

    # Capacity guards
    MAX_TREE_NODES: int = Field(default=100_000_000, gt=0)
    MAX_ENUMERATED_CONFIGS: int = Field(default=10_000_000, gt=0)
    MBP_POPULATION_CAP: int = Field(default=1_000_000, gt=0)
    ORACLE_EXHAUSTIVE_LIMIT: int = Field(default=100_000, gt=0)

    # Monte Carlo
    SRW_BATCH_SIZE: int = Field(default=1024, gt=0)

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    class Config:
        env_prefix = "ROTORWALK_"
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"


settings = Settings()
