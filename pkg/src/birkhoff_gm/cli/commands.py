"""Subcommand pipelines: each returns a report and an exit code."""

from __future__ import annotations

import logging

from birkhoff_gm._internal.rational import RationalLike, as_fraction
from birkhoff_gm.cli.reports import (
    BoundsReport,
    MatchReport,
    OracleReport,
    PolytopeReport,
    SweepEntry,
    SweepReport,
    VerifyReport,
)
from birkhoff_gm.config import BirkhoffSettings
from birkhoff_gm.errors import BirkhoffError, ConfigurationError
from birkhoff_gm.objective import (
    AdjacencyMatrix,
    ConvexObjective,
    QuadraticObjective,
    build_objective,
    diagonal_bias_objective,
    eval_f,
    eval_qform,
    near_tie_objective,
    symmetric_difference,
)
from birkhoff_gm.oracle import oracle_gm
from birkhoff_gm.polytope import (
    bfs_to_permutation,
    build_birkhoff,
    build_perturbed,
    check_tu_minors,
    enumerate_vertices,
)
from birkhoff_gm.sensitivity import (
    PerturbationParams,
    certified_parameters,
    restrict_basis,
    worst_case_parameters,
)
from birkhoff_gm.solver import certify_gap, maximize_convex, sweep_perturbations, verify_surrogate

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_ITERATION_LIMIT = 3

OBJECTIVE_CHOICES = ("gm", "near-tie", "diagonal-bias")


def _status_code(status: str) -> int:
    return EXIT_OK if status == "optimal" else EXIT_ITERATION_LIMIT


def run_match(
    e1: AdjacencyMatrix,
    e2: AdjacencyMatrix,
    settings: BirkhoffSettings,
    t: RationalLike | None = None,
) -> tuple[MatchReport, int]:
    """Certify t, solve the surrogate, restrict, read off the permutation, certify the gap.

    Raises:
        DimensionMismatchError: If the graphs have different orders.
        PerturbationRangeError: If an explicit t is outside (0, 1/n).
        BirkhoffError: If an oversized explicit t makes the restriction infeasible.
    """
    objective = build_objective(e1, e2)
    params = certified_parameters(objective)
    t_used = params.t if t is None else as_fraction(t)
    if t_used > params.t:
        logger.warning(
            "perturbation exceeds the certified value",
            extra={"t": str(t_used), "certified_t": str(params.t)},
        )
    surrogate = build_perturbed(objective.n, t_used)
    trace = maximize_convex(objective, surrogate, settings.solver)
    assert trace.final_basis is not None

    restricted = restrict_basis(trace.final_basis, surrogate)
    if not restricted.feasible:
        raise BirkhoffError(
            f"restricted basis is infeasible at t={t_used}; use a smaller perturbation",
            details={"t": str(t_used), "basis": list(trace.final_basis.columns)},
        )
    sigma = bfs_to_permutation(restricted)
    x = sigma.to_matrix()
    f_value = int(eval_f(objective, x))
    certificate = certify_gap(trace, f_value)
    report = MatchReport(
        sigma=list(sigma.images),
        symdiff=symmetric_difference(e1, e2, sigma),
        qform=int(eval_qform(objective, x)),
        f_value=f_value,
        mu=params.mu,
        lambda_bound=params.lambda_bound,
        delta_hat=params.delta_hat,
        t=t_used,
        upper_bound_int=certificate.upper_bound,
        gap=int(certificate.gap),
        iterations=trace.iteration_count,
        solver_status=trace.status,
    )
    return report, _status_code(trace.status)


def run_bound(e1: AdjacencyMatrix, e2: AdjacencyMatrix) -> tuple[BoundsReport, int]:
    params = certified_parameters(build_objective(e1, e2))
    return _bounds_report(params, worst_case=False), EXIT_OK


def run_bound_for_order(n: int) -> tuple[BoundsReport, int]:
    """Parameters valid for every graph pair of order n."""
    build_birkhoff(n)
    return _bounds_report(worst_case_parameters(n), worst_case=True), EXIT_OK


def _bounds_report(params: PerturbationParams, *, worst_case: bool) -> BoundsReport:
    return BoundsReport(
        n=params.n,
        mu=params.mu,
        lambda_bound=params.lambda_bound,
        delta_hat=params.delta_hat,
        t=params.t,
        worst_case=worst_case,
    )


def run_oracle(
    e1: AdjacencyMatrix,
    e2: AdjacencyMatrix,
    settings: BirkhoffSettings,
) -> tuple[OracleReport, int]:
    result = oracle_gm(e1, e2, max_n=settings.oracle.max_n)
    report = OracleReport(
        best_sigma=list(result.best_sigma.images),
        min_symdiff=result.min_symdiff,
        max_qform=result.max_qform,
        optimal_count=result.optimal_count,
    )
    return report, EXIT_OK


def select_objective(
    name: str,
    e1: AdjacencyMatrix | None = None,
    e2: AdjacencyMatrix | None = None,
) -> ConvexObjective:
    """Resolve an ``--objective`` choice.

    Raises:
        ConfigurationError: If the name is unknown or graphs are missing for ``gm``.
    """
    if name == "gm":
        if e1 is None or e2 is None:
            raise ConfigurationError("the gm objective needs two graphs", config_key="objective")
        return build_objective(e1, e2)
    if name == "near-tie":
        return near_tie_objective()
    if name == "diagonal-bias":
        return diagonal_bias_objective()
    raise ConfigurationError(
        f"unknown objective {name!r}",
        config_key="objective",
        expected=list(OBJECTIVE_CHOICES),
        actual=name,
    )


def run_verify(
    objective: ConvexObjective,
    name: str,
    settings: BirkhoffSettings,
    t: RationalLike | None = None,
) -> tuple[VerifyReport, int]:
    check = verify_surrogate(objective, t, settings.solver)
    report = VerifyReport(
        objective=name,
        n=objective.n,
        t=check.t,
        basis=check.basis.sorted().labels(objective.n),
        surrogate_values=list(check.surrogate_vertex.values),
        restricted_values=list(check.restricted.values),
        restricted_feasible=check.restricted.feasible,
        restricted_value=check.restricted_value,
        reference_value=check.reference_value,
        equivalent=check.equivalent,
        solver_status=check.trace.status,
        iterations=check.trace.iteration_count,
    )
    return report, _status_code(check.trace.status)


def run_sweep(
    objective: ConvexObjective,
    name: str,
    steps: int,
    settings: BirkhoffSettings,
) -> tuple[SweepReport, int]:
    checks = sweep_perturbations(objective, steps, settings.solver)
    certified = (
        certified_parameters(objective).t if isinstance(objective, QuadraticObjective) else None
    )
    entries = [
        SweepEntry(
            t=check.t,
            equivalent=check.equivalent,
            restricted_feasible=check.restricted.feasible,
            solver_status=check.trace.status,
        )
        for check in checks
    ]
    report = SweepReport(objective=name, n=objective.n, certified_t=certified, entries=entries)
    limited = any(check.trace.status != "optimal" for check in checks)
    return report, EXIT_ITERATION_LIMIT if limited else EXIT_OK


def run_polytope(
    n: int,
    settings: BirkhoffSettings,
    t: RationalLike | None = None,
    *,
    list_vertices: bool = False,
    check_tu: bool = False,
) -> tuple[PolytopeReport, int]:
    system = build_birkhoff(n) if t is None or as_fraction(t) == 0 else build_perturbed(n, t)
    vertices = [list(v.values) for v in enumerate_vertices(system)] if list_vertices else None
    sampling = settings.sampling
    tu_passed = None
    if check_tu:
        order = min(sampling.minor_order, system.rows)
        tu_passed = check_tu_minors(system, order, sampling.trials, sampling.seed)
    report = PolytopeReport(
        n=n,
        t=system.t,
        rows=system.rows,
        cols=system.cols,
        constraints=system.describe(),
        implied_last_column_sum=system.implied_last_column_sum(),
        vertices=vertices,
        vertex_count=len(vertices) if vertices is not None else None,
        tu_order=min(sampling.minor_order, system.rows) if check_tu else None,
        tu_trials=sampling.trials if check_tu else None,
        tu_passed=tu_passed,
    )
    return report, EXIT_OK

