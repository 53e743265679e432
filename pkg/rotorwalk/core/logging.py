"""Logging setup for the command line"""
import logging
import sys
from typing import Optional

from rotorwalk.core.config import settings


def configure_logging(level: Optional[str] = None) -> None:
    """Install a single stderr handler on the package logger"""
    logger = logging.getLogger("rotorwalk")
    logger.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(settings.LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel((level or settings.LOG_LEVEL).upper())
    logger.propagate = False
