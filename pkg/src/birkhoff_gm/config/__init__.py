"""Configuration system for birkhoff-gm."""

from birkhoff_gm.config.logging_config import LoggingConfig
from birkhoff_gm.config.sampling import SamplingConfig
from birkhoff_gm.config.settings import BirkhoffSettings

__all__ = [
    "BirkhoffSettings",
    "LoggingConfig",
    "SamplingConfig",
]
