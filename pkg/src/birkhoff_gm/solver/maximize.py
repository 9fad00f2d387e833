"""Entry point for convex maximization over a surrogate polytope."""

from __future__ import annotations

import logging

from birkhoff_gm.errors import DegeneracyHazardError, DimensionMismatchError
from birkhoff_gm.objective.base import ConvexObjective
from birkhoff_gm.polytope import ConstraintSystem
from birkhoff_gm.solver.clusters import ClusterSearch
from birkhoff_gm.solver.config import SolverOptions
from birkhoff_gm.solver.hooks import SolverHooks
from birkhoff_gm.solver.search import BranchAndBound
from birkhoff_gm.solver.simplicial import SimplicialSearch
from birkhoff_gm.solver.trace import SolverTrace

logger = logging.getLogger(__name__)


def maximize_convex(
    objective: ConvexObjective,
    system: ConstraintSystem,
    options: SolverOptions | None = None,
    hooks: SolverHooks | None = None,
) -> SolverTrace:
    """Maximize a convex objective over a non-degenerate surrogate polytope.

    The vertex-cluster strategy needs an objective with a drift bound; other
    objectives fall back to the simplicial search.

    Args:
        objective: Convex objective of matching side length.
        system: Surrogate system with t > 0.
        options: Solver options (defaults if None).
        hooks: Progress callbacks, used when ``options.enable_hooks``.

    Returns:
        The bound trace with the best vertex and its basis.

    Raises:
        DegeneracyHazardError: If the system is unperturbed.
        DimensionMismatchError: If the objective and system sizes differ.
        SizeLimitError: If the cluster search is asked for a very large n.
    """
    options = options or SolverOptions()
    if objective.n != system.n:
        raise DimensionMismatchError(system.n, objective.n, what="objective")
    if not system.perturbed:
        raise DegeneracyHazardError(
            "refusing to branch over a degenerate polytope; build a surrogate with t > 0 first",
            details={"n": system.n},
        )
    active_hooks = hooks if hooks is not None and options.enable_hooks else SolverHooks()
    search: type[BranchAndBound] = SimplicialSearch
    if options.strategy == "vertex-cluster":
        if objective.nonnegative_hessian:
            search = ClusterSearch
        else:
            logger.info("objective has no drift bound; using the simplicial search")
    logger.debug(
        "starting branch-and-bound",
        extra={"n": system.n, "t": str(system.t), "search": search.__name__},
    )
    return search(objective, system, options, active_hooks).run()
