"""Experiment configuration file access"""
from pathlib import Path
from typing import Union

from rotorwalk.core.exceptions import ConfigError
from rotorwalk.schemas.experiment import ExperimentConfig
from rotorwalk.services.experiment import parse_config


class ConfigFileRepository:
    """Reads JSON experiment configurations from disk"""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def read_text(self) -> str:
        """Raw UTF-8 contents of the configuration file"""
        try:
            return self.path.read_text(encoding="utf-8")
        except FileNotFoundError as exc:
            raise ConfigError([f"config file {self.path} does not exist"]) from exc
        except (OSError, UnicodeDecodeError) as exc:
            raise ConfigError([f"config file {self.path} cannot be read: {exc}"]) from exc

    def load(self) -> ExperimentConfig:
        """Parse and validate the configuration file"""
        return parse_config(self.read_text())
