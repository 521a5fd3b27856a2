#!/usr/bin/env python3
"""
Configuration management for graph-confspace
"""

import os
from pathlib import Path
from typing import Literal, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from .error_handler import ConfigurationError

# Load environment variables
load_dotenv()

INT64_MAX = 2 ** 63 - 1


class LoggingConfig(BaseModel):
    """Logging configuration"""
    level: str = Field(default="INFO", description="Logging level")
    format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="Log format"
    )
    file: Optional[str] = Field(default=None, description="Log file path")
    max_size: int = Field(default=10 * 1024 * 1024, description="Max log file size in bytes")
    backup_count: int = Field(default=5, description="Number of backup log files")


class ComputationConfig(BaseModel):
    """Complex construction and homology settings"""
    arithmetic: Literal["checked", "bigint"] = Field(
        default="checked",
        description="Smith form arithmetic: fixed-width checked integers or arbitrary precision"
    )
    overflow_bound: int = Field(default=INT64_MAX, description="Largest magnitude allowed in checked mode")
    cell_budget: int = Field(default=5_000_000, gt=0, description="Refuse complexes with more cells than this")
    rank_only_for_trees: bool = Field(
        default=True,
        description="Skip torsion on tree graphs (their homology is free)"
    )
    parallel_dimensions: bool = Field(default=False, description="Compute per-dimension Smith forms in worker processes")
    max_workers: int = Field(default=4, gt=0, description="Maximum number of worker processes")


class CycleConfig(BaseModel):
    """Cycle library settings"""
    spectator_limit: int = Field(
        default=20_000,
        gt=0,
        description="Maximum number of chains produced by the tree over-complete basis"
    )


class ErrorReportConfig(BaseModel):
    """Error report persistence"""
    save_reports: bool = Field(default=False, description="Write JSON error reports")
    reports_dir: str = Field(default="error_reports", description="Directory for JSON error reports")


class OutputConfig(BaseModel):
    """Result output settings"""
    json_indent: int = Field(default=2, ge=0, description="Indentation of JSON output")
    include_timings: bool = Field(default=False, description="Write wall time into JSON reports")


class Config(BaseModel):
    """Main configuration class"""
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    computation: ComputationConfig = Field(default_factory=ComputationConfig)
    cycles: CycleConfig = Field(default_factory=CycleConfig)
    errors: ErrorReportConfig = Field(default_factory=ErrorReportConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    environment: str = Field(default="development", description="Environment")
    debug: bool = Field(default=False, description="Debug mode")

    @classmethod
    def from_file(cls, config_path: str) -> "Config":
        """Load configuration from a YAML file"""
        config_file = Path(config_path)
        if not config_file.exists():
            raise ConfigurationError(f"Configuration file not found: {config_path}", config_file=config_path)

        try:
            with open(config_file, "r") as f:
                config_data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Configuration file is not valid YAML: {e}", config_file=config_path) from e
        if not isinstance(config_data, dict):
            raise ConfigurationError("Configuration file must hold a mapping of sections", config_file=config_path)

        try:
            return cls(**config_data)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid configuration: {e}", config_file=config_path) from e

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from GCS_* environment variables"""
        try:
            return cls(**cls._env_data())
        except ValueError as e:
            raise ConfigurationError(f"Invalid GCS_* environment setting: {e}") from e

    @staticmethod
    def _env_data() -> dict:
        return {
            "logging": {
                "level": os.getenv("GCS_LOG_LEVEL", "INFO"),
                "file": os.getenv("GCS_LOG_FILE"),
                "max_size": int(os.getenv("GCS_LOG_MAX_SIZE", str(10 * 1024 * 1024))),
                "backup_count": int(os.getenv("GCS_LOG_BACKUP_COUNT", "5")),
            },
            "computation": {
                "arithmetic": os.getenv("GCS_ARITHMETIC", "checked"),
                "cell_budget": int(os.getenv("GCS_CELL_BUDGET", "5000000")),
                "rank_only_for_trees": os.getenv("GCS_RANK_ONLY_FOR_TREES", "true").lower() == "true",
                "parallel_dimensions": os.getenv("GCS_PARALLEL_DIMENSIONS", "false").lower() == "true",
                "max_workers": int(os.getenv("GCS_MAX_WORKERS", "4")),
            },
            "cycles": {
                "spectator_limit": int(os.getenv("GCS_SPECTATOR_LIMIT", "20000")),
            },
            "errors": {
                "save_reports": os.getenv("GCS_SAVE_ERROR_REPORTS", "false").lower() == "true",
                "reports_dir": os.getenv("GCS_ERROR_REPORTS_DIR", "error_reports"),
            },
            "output": {
                "include_timings": os.getenv("GCS_INCLUDE_TIMINGS", "false").lower() == "true",
            },
            "environment": os.getenv("GCS_ENVIRONMENT", "development"),
            "debug": os.getenv("GCS_DEBUG", "false").lower() == "true",
        }

    def save_to_file(self, config_path: str) -> None:
        """Save configuration to a YAML file"""
        config_file = Path(config_path)
        config_file.parent.mkdir(parents=True, exist_ok=True)

        with open(config_file, "w") as f:
            yaml.dump(self.model_dump(), f, default_flow_style=False, indent=2)
