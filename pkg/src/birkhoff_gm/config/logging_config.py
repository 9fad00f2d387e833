"""Logging configuration."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class LoggingConfig(BaseModel):
    """Configuration for logging behavior.

    The CLI reads the level from ``BIRKHOFF_LOGGING__LEVEL`` through
    the root settings, so solver progress can be turned on without flags.

    Attributes:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
        structured: Emit one JSON object per log line.
        file: Optional log file; stderr when unset.
        include_extras: Attach ``extra`` context to structured lines.
    """

    level: LogLevel = Field(
        default="WARNING",
        description="Log level",
    )
    structured: bool = Field(
        default=False,
        description="Enable JSON format logging",
    )
    file: Path | None = Field(
        default=None,
        description="Log file path (stderr when unset)",
    )
    include_extras: bool = Field(
        default=True,
        description="Include extra context fields in structured logs",
    )
