"""Bookkeeping shared by the branch-and-bound searches."""

from __future__ import annotations

import logging
from fractions import Fraction

from birkhoff_gm.objective.base import ConvexObjective
from birkhoff_gm.polytope import BasicSolution, ConstraintSystem
from birkhoff_gm.solver.config import SolverOptions
from birkhoff_gm.solver.hooks import SolverHooks
from birkhoff_gm.solver.trace import SolverTrace

logger = logging.getLogger(__name__)


class BranchAndBound:
    """Incumbent, bound trace and hook dispatch for one run.

    Subclasses implement :meth:`run` and report through :meth:`offer`,
    :meth:`record` and :meth:`finish`.
    """

    def __init__(
        self,
        objective: ConvexObjective,
        system: ConstraintSystem,
        options: SolverOptions,
        hooks: SolverHooks,
    ) -> None:
        self.objective = objective
        self.system = system
        self.options = options
        self.hooks = hooks
        self.trace = SolverTrace()
        self.incumbent: BasicSolution | None = None
        self.incumbent_value: Fraction | None = None

    def run(self) -> SolverTrace:
        raise NotImplementedError

    def improves(self, value: Fraction) -> bool:
        return self.incumbent_value is None or value > self.incumbent_value

    def offer(self, vertex: BasicSolution, value: Fraction) -> None:
        """Replace the incumbent if the vertex is strictly better."""
        if not self.improves(value):
            return
        self.incumbent, self.incumbent_value = vertex, value
        logger.info(
            "new incumbent",
            extra={"value": str(value), "basis": list(vertex.basis.columns)},
        )
        self.hooks.trigger_incumbent(vertex, value)

    def record(self, iteration: int, top: Fraction | None, open_nodes: int) -> None:
        """Log the global bounds; ``top`` is the best bound still open."""
        assert self.incumbent_value is not None
        upper = self.incumbent_value if top is None else max(top, self.incumbent_value)
        entry = self.trace.record(iteration, upper, self.incumbent_value, open_nodes)
        logger.debug(
            "branch-and-bound iteration",
            extra={
                "iteration": iteration,
                "upper_bound": str(entry.upper_bound),
                "incumbent": str(entry.incumbent_value),
                "open_nodes": open_nodes,
            },
        )
        self.hooks.trigger_iteration(entry)

    def budget_spent(self, iteration: int, open_nodes: int) -> bool:
        max_iterations = self.options.max_iterations
        if max_iterations is None or iteration < max_iterations:
            return False
        logger.warning(
            "iteration limit reached",
            extra={"max_iterations": max_iterations, "open_nodes": open_nodes},
        )
        return True

    def finish(self) -> SolverTrace:
        self.trace.final_vertex = self.incumbent
        self.trace.final_basis = self.incumbent.basis if self.incumbent else None
        self.hooks.trigger_solve_complete(self.trace)
        return self.trace
