"""Configuration and report persistence"""
from rotorwalk.repositories.config_file import ConfigFileRepository
from rotorwalk.repositories.report import ReportRepository

__all__ = ["ConfigFileRepository", "ReportRepository"]
