"""Randomized diagnostics configuration."""

from __future__ import annotations

from pydantic import BaseModel, Field


class SamplingConfig(BaseModel):
    """Defaults for seeded randomized checks run from the CLI.

    Attributes:
        seed: Seed for every randomized diagnostic.
        trials: Number of random minors sampled by the unimodularity check.
        minor_order: Order of the sampled square minors.
    """

    seed: int = Field(
        default=0,
        description="Seed for randomized diagnostics",
    )
    trials: int = Field(
        default=500,
        gt=0,
        description="Random minors sampled by the unimodularity check",
    )
    minor_order: int = Field(
        default=3,
        gt=0,
        description="Order of sampled square minors",
    )
