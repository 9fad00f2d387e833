"""Solver configuration."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

SearchStrategy = Literal["vertex-cluster", "simplicial"]
SubdivisionRule = Literal["omega", "longest-edge"]
TieBreak = Literal["lexicographic"]


class SolverOptions(BaseModel):
    """Configuration for the convex maximizer.

    Attributes:
        strategy: "vertex-cluster" opens the vertices near each permutation
            best bound first; "simplicial" subdivides simplices covering the
            polytope.
        max_iterations: Budget of opened clusters or subdivided simplices
            (None for unlimited).
        subdivision_rule: How a simplex is split (simplicial only): at the
            point where its overestimator peaks ("omega") or at the
            midpoint of its longest edge ("longest-edge").
        tie_break: Ordering used for every tie (only lexicographic).
        ascent_steps: Linearization rounds used to push an incumbent
            candidate to a locally optimal vertex (simplicial only).
        enable_hooks: Whether to invoke solver hooks.

    Example:
        >>> options = SolverOptions(strategy="simplicial", subdivision_rule="longest-edge")
    """

    strategy: SearchStrategy = Field(
        default="vertex-cluster",
        description="Branch-and-bound strategy",
    )
    max_iterations: int | None = Field(
        default=5000,
        ge=1,
        description="Maximum branching steps before stopping (None for unlimited)",
    )
    subdivision_rule: SubdivisionRule = Field(
        default="omega",
        description="Simplex subdivision rule",
    )
    tie_break: TieBreak = Field(
        default="lexicographic",
        description="Deterministic tie-breaking rule",
    )
    ascent_steps: int = Field(
        default=8,
        ge=1,
        description="Local ascent rounds per incumbent candidate",
    )
    enable_hooks: bool = Field(
        default=True,
        description="Whether to invoke hooks during the solve",
    )
