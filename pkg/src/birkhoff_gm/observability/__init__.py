"""Logging and observability."""

from birkhoff_gm.observability.logging import (
    StructuredFormatter,
    StructuredLogger,
    setup_logging,
)

__all__ = [
    "StructuredFormatter",
    "StructuredLogger",
    "setup_logging",
]
