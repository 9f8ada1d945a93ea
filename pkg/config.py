"""
WWLab — Centralized Configuration

Pydantic-based settings with auto .env loading, type validation, and defaults.
Every setting is overridable via a WWLAB_* environment variable or the .env file.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogLevel(str, Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


_PROJECT_ROOT = Path(__file__).parent


class WWLabConfig(BaseSettings):
    """All configuration for the wwlab command line."""

    model_config = SettingsConfigDict(
        env_prefix="WWLAB_",
        env_file=str(_PROJECT_ROOT / ".env"),
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # ── Verification ─────────────────────────────────
    threads: int = Field(default=4, ge=1)
    default_trunc: int = Field(default=20, ge=1)
    default_k_min: int = Field(default=1, ge=0)
    default_k_max: int = Field(default=8, ge=0)
    default_max_weight: int = Field(default=14, ge=0)

    # ── Output ───────────────────────────────────────
    json_indent: Optional[int] = 2
    log_level: LogLevel = LogLevel.WARNING

    # ── Paths ────────────────────────────────────────
    project_root: Path = Field(default=_PROJECT_ROOT)


def load_config() -> WWLabConfig:
    """Load configuration from .env + environment variables."""
    return WWLabConfig()
