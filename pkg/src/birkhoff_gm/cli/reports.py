"""JSON-serializable reports emitted by the CLI.

Exact rationals are always written as ``"p/q"`` strings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Literal

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer, model_validator

from birkhoff_gm._internal.rational import as_fraction, format_fraction


def _parse_rational(value: object) -> Fraction:
    try:
        return as_fraction(value)  # type: ignore[arg-type]
    except TypeError as e:
        raise ValueError(str(e)) from e


Rational = Annotated[
    Fraction,
    BeforeValidator(_parse_rational),
    PlainSerializer(format_fraction, return_type=str),
]


class Report(BaseModel):
    """Base for all reports: frozen, exact, no unknown fields."""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    kind: str


class MatchReport(Report):
    """Result of the full matching pipeline."""

    kind: Literal["match"] = "match"
    sigma: list[int]
    symdiff: int = Field(ge=0)
    qform: int = Field(ge=0)
    f_value: int
    mu: int
    lambda_bound: int
    delta_hat: Rational
    t: Rational
    upper_bound_int: int
    gap: int
    iterations: int
    solver_status: str

    @model_validator(mode="after")
    def _gap_matches_bound(self) -> MatchReport:
        if self.gap != self.upper_bound_int - self.f_value:
            raise ValueError("gap must equal upper_bound_int - f_value")
        if self.gap < 0:
            raise ValueError("gap must be non-negative: the bound cannot undercut a vertex")
        if self.solver_status == "optimal" and self.gap != 0:
            raise ValueError("an optimal solve must close the gap")
        return self


class BoundsReport(Report):
    """Certified parameters without solving."""

    kind: Literal["bound"] = "bound"
    n: int
    mu: int
    lambda_bound: int
    delta_hat: Rational
    t: Rational
    worst_case: bool = False


class OracleReport(Report):
    """Exhaustive ground truth."""

    kind: Literal["oracle"] = "oracle"
    best_sigma: list[int]
    min_symdiff: int
    max_qform: int
    optimal_count: int = Field(ge=1)


class VerifyReport(Report):
    """Whether the surrogate's optimal basis is optimal for the original problem."""

    kind: Literal["verify"] = "verify"
    objective: str
    n: int
    t: Rational
    basis: list[str]
    surrogate_values: list[Rational]
    restricted_values: list[Rational]
    restricted_feasible: bool
    restricted_value: Rational | None
    reference_value: Rational
    equivalent: bool
    solver_status: str
    iterations: int


class SweepEntry(BaseModel):
    """One perturbation of a sweep."""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    t: Rational
    equivalent: bool
    restricted_feasible: bool
    solver_status: str


class SweepReport(Report):
    """Equivalence as t shrinks from just under 1/n."""

    kind: Literal["sweep"] = "sweep"
    objective: str
    n: int
    certified_t: Rational | None
    entries: list[SweepEntry]


class PolytopeReport(Report):
    """Constraint system summary with optional vertices and unimodularity check."""

    kind: Literal["polytope"] = "polytope"
    n: int
    t: Rational
    rows: int
    cols: int
    constraints: list[str]
    implied_last_column_sum: Rational
    vertices: list[list[Rational]] | None = None
    vertex_count: int | None = None
    tu_order: int | None = None
    tu_trials: int | None = None
    tu_passed: bool | None = None

