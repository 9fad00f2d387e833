"""Right-hand-side sensitivity of basic solutions of integral systems."""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from birkhoff_gm._internal.rational import RationalLike, as_fraction, is_integral
from birkhoff_gm.errors import HypothesisViolationError, IntegralityViolationError
from birkhoff_gm.polytope import BasicSolution, Basis, ConstraintSystem, random_basis, solve_basis


@dataclass(frozen=True)
class SensitivityTrial:
    """One basis solved against an integral rhs ``b`` and against ``b - gamma``.

    Attributes:
        system: Supplies the coefficient matrix.
        b: Integral right-hand side.
        gamma: Perturbation with ``|gamma_i| < big_gamma / m``.
        big_gamma: Deviation budget, positive.
        basis: The shared basis.
        xhat: Basic solution for ``b``.
        xprime: Basic solution for ``b - gamma``.
    """

    system: ConstraintSystem
    b: tuple[Fraction, ...]
    gamma: tuple[Fraction, ...]
    big_gamma: Fraction
    basis: Basis
    xhat: BasicSolution
    xprime: BasicSolution

    @property
    def m(self) -> int:
        return len(self.b)


@dataclass(frozen=True)
class SensitivityOutcome:
    """Deviations between the two basic solutions of a trial."""

    deviations: tuple[Fraction, ...]
    squared_norm: Fraction
    big_gamma: Fraction
    m: int

    @property
    def max_deviation(self) -> Fraction:
        return max(self.deviations)

    @property
    def within_bounds(self) -> bool:
        """Every deviation below Gamma and the squared norm below m * Gamma^2."""
        return (
            all(d < self.big_gamma for d in self.deviations)
            and self.squared_norm < self.m * self.big_gamma**2
        )


@dataclass(frozen=True)
class InfeasibilityClass:
    """Feasibility of an integral basic solution, with a witness when infeasible.

    Attributes:
        feasible: Whether every component is non-negative.
        witness: First column whose value is at most -1.
        witness_value: Value of that column.
    """

    feasible: bool
    witness: int | None = None
    witness_value: Fraction | None = None


def _check_hypotheses(b: Sequence[Fraction], gamma: Sequence[Fraction], big_gamma: Fraction) -> None:
    if big_gamma <= 0:
        raise HypothesisViolationError(f"deviation budget must be positive, got {big_gamma}")
    if len(gamma) != len(b):
        raise HypothesisViolationError(f"gamma has {len(gamma)} entries, expected {len(b)}")
    for i, bi in enumerate(b):
        if not is_integral(bi):
            raise HypothesisViolationError(f"rhs entry {i} is not an integer: {bi}", index=i)
    limit = big_gamma / len(b)
    for i, g in enumerate(gamma):
        if abs(g) >= limit:
            raise HypothesisViolationError(
                f"|gamma[{i}]| = {abs(g)} is not below {limit}",
                index=i,
                limit=limit,
            )


def make_sensitivity_trial(
    system: ConstraintSystem,
    basis: Basis,
    gamma: Sequence[RationalLike],
    big_gamma: RationalLike,
    b: Sequence[RationalLike] | None = None,
) -> SensitivityTrial:
    """Solve one basis against ``b`` and ``b - gamma``.

    Args:
        system: Supplies the coefficient matrix; its rhs is the default ``b``.
        basis: A basis of the system.
        gamma: Perturbation vector.
        big_gamma: Deviation budget.
        b: Integral rhs, if not the system's own.

    Raises:
        HypothesisViolationError: If b is fractional or some ``|gamma_i| >= Gamma/m``.
        NotABasisError: If the basis is singular.
    """
    rhs = tuple(as_fraction(v) for v in (system.rhs if b is None else b))
    gamma_q = tuple(as_fraction(g) for g in gamma)
    big_gamma_q = as_fraction(big_gamma)
    _check_hypotheses(rhs, gamma_q, big_gamma_q)
    shifted = tuple(bi - gi for bi, gi in zip(rhs, gamma_q, strict=True))
    return SensitivityTrial(
        system=system,
        b=rhs,
        gamma=gamma_q,
        big_gamma=big_gamma_q,
        basis=basis,
        xhat=solve_basis(system, basis, rhs),
        xprime=solve_basis(system, basis, shifted),
    )


def random_sensitivity_trial(
    system: ConstraintSystem,
    rng: random.Random,
    big_gamma: RationalLike = Fraction(1, 2),
    resolution: int = 1000,
) -> SensitivityTrial:
    """Draw a random basis and a random admissible gamma.

    Each ``gamma_i`` is a multiple of ``1/resolution`` of the open interval
    ``(-Gamma/m, Gamma/m)``.
    """
    big_gamma_q = as_fraction(big_gamma)
    limit = big_gamma_q / system.rows
    gamma = []
    for _ in range(system.rows):
        k = rng.randint(-(resolution - 1), resolution - 1)
        gamma.append(limit * Fraction(k, resolution))
    return make_sensitivity_trial(system, random_basis(system, rng), gamma, big_gamma_q)


def perturb_and_resolve(trial: SensitivityTrial) -> SensitivityOutcome:
    """Componentwise deviations ``|xhat_j - xprime_j|`` and their squared norm.

    Raises:
        HypothesisViolationError: If the trial violates its size hypothesis.
    """
    _check_hypotheses(trial.b, trial.gamma, trial.big_gamma)
    deviations = tuple(
        abs(a - b) for a, b in zip(trial.xhat.values, trial.xprime.values, strict=True)
    )
    return SensitivityOutcome(
        deviations=deviations,
        squared_norm=sum((d * d for d in deviations), Fraction(0)),
        big_gamma=trial.big_gamma,
        m=trial.m,
    )


def classify_infeasibility(solution: BasicSolution) -> InfeasibilityClass:
    """Classify an integral basic solution; infeasible ones have a component <= -1.

    Raises:
        HypothesisViolationError: If the solution was built from a fractional rhs.
        IntegralityViolationError: If a component is fractional.
    """
    if not solution.integral_rhs:
        raise HypothesisViolationError("classification requires an integral right-hand side")
    for k, v in enumerate(solution.values):
        if not is_integral(v):
            raise IntegralityViolationError(k, v)
    if solution.feasible:
        return InfeasibilityClass(feasible=True)
    witness = next(k for k, v in enumerate(solution.values) if v <= -1)
    return InfeasibilityClass(feasible=False, witness=witness, witness_value=solution.values[witness])
