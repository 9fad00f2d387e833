"""Check whether a surrogate's optimal basis stays optimal for the original problem."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from birkhoff_gm._internal.rational import RationalLike, as_fraction
from birkhoff_gm.errors import ConfigurationError
from birkhoff_gm.objective.base import ConvexObjective
from birkhoff_gm.objective.quadratic import QuadraticObjective
from birkhoff_gm.oracle import oracle_gm
from birkhoff_gm.polytope import BasicSolution, Basis, build_birkhoff, build_perturbed
from birkhoff_gm.sensitivity.bounds import certified_parameters
from birkhoff_gm.sensitivity.lift import restrict_basis
from birkhoff_gm.solver.brute import brute_force_vertex_max
from birkhoff_gm.solver.config import SolverOptions
from birkhoff_gm.solver.hooks import SolverHooks
from birkhoff_gm.solver.maximize import maximize_convex
from birkhoff_gm.solver.trace import SolverTrace

logger = logging.getLogger(__name__)

# Fraction of 1/n where a sweep starts.
SWEEP_START = Fraction(999, 1000)


@dataclass(frozen=True)
class SurrogateCheck:
    """Outcome of solving a surrogate and restricting its basis.

    Attributes:
        t: Perturbation used.
        basis: Basis of the surrogate's best vertex.
        surrogate_vertex: That vertex.
        restricted: The basis re-solved at t = 0.
        restricted_value: Objective at the restricted solution (None if infeasible).
        reference_value: Optimum of the original problem.
        equivalent: Restriction is feasible, optimal, and the solve finished.
        trace: The surrogate solve.
    """

    t: Fraction
    basis: Basis
    surrogate_vertex: BasicSolution
    restricted: BasicSolution
    restricted_value: Fraction | None
    reference_value: Fraction
    equivalent: bool
    trace: SolverTrace


def reference_optimum(objective: ConvexObjective) -> Fraction:
    """Optimum over the unperturbed polytope (oracle for graph objectives)."""
    if isinstance(objective, QuadraticObjective):
        result = oracle_gm(objective.e1, objective.e2)
        return Fraction(result.max_qform + objective.mu * objective.n)
    _, value = brute_force_vertex_max(objective, build_birkhoff(objective.n))
    return value


def verify_surrogate(
    objective: ConvexObjective,
    t: RationalLike | None = None,
    options: SolverOptions | None = None,
    hooks: SolverHooks | None = None,
    reference_value: Fraction | None = None,
) -> SurrogateCheck:
    """Solve the surrogate at ``t`` and test the restricted basis.

    Args:
        objective: Objective to maximize.
        t: Perturbation; the certified value when None (graph objectives only).
        options: Solver options.
        hooks: Solver hooks.
        reference_value: Known original optimum, computed if None.

    Raises:
        PerturbationRangeError: If t is outside (0, 1/n).
        ConfigurationError: If t is None for a non-graph objective.
    """
    if t is None:
        if not isinstance(objective, QuadraticObjective):
            raise ConfigurationError(
                "a perturbation is required for objectives without a certified bound",
                config_key="t",
            )
        t_q = certified_parameters(objective).t
    else:
        t_q = as_fraction(t)
    surrogate = build_perturbed(objective.n, t_q)
    trace = maximize_convex(objective, surrogate, options, hooks)
    assert trace.final_basis is not None and trace.final_vertex is not None

    restricted = restrict_basis(trace.final_basis, surrogate)
    restricted_value = objective.evaluate_values(restricted.values) if restricted.feasible else None
    reference = reference_value if reference_value is not None else reference_optimum(objective)
    equivalent = trace.is_optimal and restricted_value is not None and restricted_value == reference
    logger.info(
        "surrogate verified",
        extra={"t": str(t_q), "equivalent": equivalent, "status": trace.status},
    )
    return SurrogateCheck(
        t=t_q,
        basis=trace.final_basis,
        surrogate_vertex=trace.final_vertex,
        restricted=restricted,
        restricted_value=restricted_value,
        reference_value=reference,
        equivalent=equivalent,
        trace=trace,
    )


def sweep_perturbations(
    objective: ConvexObjective,
    steps: int,
    options: SolverOptions | None = None,
) -> list[SurrogateCheck]:
    """Verify at ``t_k = (999/1000) / (n 2^k)`` for ``k = 0..steps-1``.

    Shows how large t can get before the restricted basis stops being optimal.
    """
    if steps < 1:
        raise ConfigurationError("a sweep needs at least one step", config_key="steps", actual=steps)
    reference = reference_optimum(objective)
    t = SWEEP_START / objective.n
    checks = []
    for _ in range(steps):
        checks.append(verify_surrogate(objective, t, options, reference_value=reference))
        t /= 2
    return checks
