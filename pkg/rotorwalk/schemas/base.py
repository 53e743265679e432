"""Base Pydantic schemas"""
from pydantic import BaseModel, ConfigDict


class BaseSchema(BaseModel):
    """Base schema with common configuration"""
    model_config = ConfigDict(from_attributes=True, use_enum_values=False)


class SeededSchema(BaseSchema):
    """Schema for results of stochastic commands; the seed is always echoed"""
    seed: int
