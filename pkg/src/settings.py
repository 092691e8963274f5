"""Verifier settings: config/defaults.yaml overridden by environment variables."""
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "defaults.yaml"

# environment variable -> settings field
ENV_OVERRIDES = {
    "COVERING_JOBS": "jobs",
    "COVERING_STRATEGY": "strategy",
    "COVERING_SOLVER_BUDGET": "solver_budget",
    "COVERING_LOG_LEVEL": "log_level",
}


class VerifierSettings(BaseModel):
    """Defaults for the exhaustive sweep, the solver and logging."""
    strategy: str = Field(default="prune", description="'prune' or 'scan'")
    jobs: Optional[int] = Field(default=None, ge=1, description="Worker processes; None = available parallelism")
    partitions_per_job: int = Field(default=4, ge=1)
    solver_budget: Optional[int] = Field(default=None, ge=1, description="Search-tree node limit; None = unlimited")
    log_level: str = "WARNING"

    @field_validator("strategy")
    @classmethod
    def _check_strategy(cls, value: str) -> str:
        if value not in ("prune", "scan"):
            raise ValueError(f"strategy must be 'prune' or 'scan', got {value!r}")
        return value

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return value

    @property
    def effective_jobs(self) -> int:
        return self.jobs or os.cpu_count() or 1


def _flatten(data: Dict[str, Any]) -> Dict[str, Any]:
    exhaustive = data.get("exhaustive") or {}
    graph = data.get("graph") or {}
    logging_section = data.get("logging") or {}
    flat = {
        "strategy": exhaustive.get("strategy"),
        "jobs": exhaustive.get("jobs"),
        "partitions_per_job": exhaustive.get("partitions_per_job"),
        "solver_budget": graph.get("solver_budget"),
        "log_level": logging_section.get("level"),
    }
    # null in YAML means "use the field default"
    return {key: value for key, value in flat.items() if value is not None}


def load_settings(config_path: Optional[str] = None) -> VerifierSettings:
    """
    Load settings from YAML, then apply environment overrides.

    Args:
        config_path: YAML file; defaults to $COVERING_CONFIG or config/defaults.yaml

    Returns:
        Validated VerifierSettings
    """
    load_dotenv()
    path = Path(config_path or os.getenv("COVERING_CONFIG") or DEFAULT_CONFIG_PATH)
    values: Dict[str, Any] = {}
    if path.exists():
        with open(path, "r", encoding="utf-8") as f:
            values.update(_flatten(yaml.safe_load(f) or {}))
    else:
        logger.warning(f"Config not found: {path}, using built-in defaults")

    for env_name, key in ENV_OVERRIDES.items():
        raw = os.getenv(env_name)
        if raw is None or raw == "":
            continue
        if key in ("jobs", "solver_budget"):
            values[key] = None if raw.lower() in ("none", "null", "auto") else int(raw)
        else:
            values[key] = raw
    return VerifierSettings(**values)
