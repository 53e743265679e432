"""Exception hierarchy shared by services and the command line"""
from typing import Any, List, Optional


class RotorWalkError(Exception):
    """Base error; `exit_code` is what the CLI exits with"""

    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DomainError(RotorWalkError, ValueError):
    """Argument outside the domain of an operation"""

    exit_code = 3


class DistributionError(DomainError):
    """Rotor distribution family does not match the base graph"""


class PathError(DomainError):
    """Child-index path cannot be followed in a cover tree"""

    def __init__(self, detail: str, step: int):
        super().__init__(detail)
        self.step = step


class ContractViolation(RotorWalkError):
    """Operation invoked in a state its contract excludes"""

    exit_code = 6


class CapacityError(RotorWalkError):
    """Projected size exceeds a configured guard"""

    exit_code = 4

    def __init__(self, detail: str, projected: int, limit: int):
        super().__init__(detail)
        self.projected = projected
        self.limit = limit


class NumericError(RotorWalkError, ArithmeticError):
    """Iteration did not converge within its cap"""

    exit_code = 5

    def __init__(self, detail: str, last_iterate: Any = None):
        super().__init__(detail)
        self.last_iterate = last_iterate


class DiagnosticsError(RotorWalkError):
    """Internal consistency counter overflowed; indicates a bug"""

    exit_code = 6


class ConfigError(RotorWalkError):
    """Experiment configuration failed schema or semantic validation"""

    exit_code = 2

    def __init__(self, errors: List[str], detail: Optional[str] = None):
        super().__init__(detail or "; ".join(errors))
        self.errors = list(errors)
