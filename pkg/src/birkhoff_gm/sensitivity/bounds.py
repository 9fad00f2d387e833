"""Certified perturbation parameters and integer rounding of bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from birkhoff_gm._internal.rational import RationalLike, as_fraction
from birkhoff_gm.errors import ConfigurationError, InvalidDeltaError
from birkhoff_gm.objective.graph import AdjacencyMatrix
from birkhoff_gm.objective.quadratic import QuadraticObjective, delta_for_quadratic


@dataclass(frozen=True)
class PerturbationParams:
    """Everything needed to build a surrogate that keeps the optimal basis.

    Attributes:
        n: Side length.
        mu: Convexification shift.
        lambda_bound: Spectral radius bound (``mu > lambda_bound``).
        delta_hat: Continuity radius in (0, 1).
        t: Perturbation with ``0 < t < delta_hat / (n (2n - 1))``.
    """

    n: int
    mu: int
    lambda_bound: int
    delta_hat: Fraction
    t: Fraction

    def __post_init__(self) -> None:
        if not self.mu > self.lambda_bound >= 0:
            raise ConfigurationError(
                "shift must exceed a non-negative spectral bound",
                config_key="mu",
                expected=f"> {self.lambda_bound}",
                actual=self.mu,
            )
        if not 0 < self.delta_hat < 1:
            raise InvalidDeltaError(self.delta_hat)
        supremum = self.delta_hat / (self.n * (2 * self.n - 1))
        if not 0 < self.t < supremum:
            raise ConfigurationError(
                "perturbation outside the basis-preserving interval",
                config_key="t",
                expected=f"(0, {supremum})",
                actual=str(self.t),
            )


def t_bound(delta_hat: RationalLike, n: int) -> Fraction:
    """Half the supremum of the basis-preserving interval: ``delta / (2n(2n-1))``.

    Raises:
        InvalidDeltaError: If delta_hat is not strictly between 0 and 1.
    """
    delta = as_fraction(delta_hat)
    if not 0 < delta < 1:
        raise InvalidDeltaError(delta)
    return delta / (2 * n * (2 * n - 1))


def round_upper_bound(ub: RationalLike) -> int:
    """Ceiling of an upper bound; valid for objectives integral on vertices."""
    return math.ceil(as_fraction(ub))


def certified_parameters(obj: QuadraticObjective) -> PerturbationParams:
    """Chain spectral bound, shift, continuity radius and perturbation."""
    delta_hat = delta_for_quadratic(obj)
    return PerturbationParams(
        n=obj.n,
        mu=obj.mu,
        lambda_bound=obj.lambda_bound,
        delta_hat=delta_hat,
        t=t_bound(delta_hat, obj.n),
    )


def worst_case_parameters(n: int) -> PerturbationParams:
    """Parameters valid for every graph pair of order n (complete graphs)."""
    complete = AdjacencyMatrix.complete(n)
    return certified_parameters(QuadraticObjective(complete, complete))
