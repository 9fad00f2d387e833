"""Solver progress hooks and callbacks."""

from __future__ import annotations

import logging
from collections.abc import Callable
from fractions import Fraction
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from birkhoff_gm.polytope import BasicSolution, ConstraintSystem
    from birkhoff_gm.solver.trace import SolverTrace, TraceEntry

logger = logging.getLogger(__name__)

# Type aliases for hook functions
SolveStartHook = Callable[["ConstraintSystem"], None]
IterationHook = Callable[["TraceEntry"], None]
IncumbentHook = Callable[["BasicSolution", Fraction], None]
SolveCompleteHook = Callable[["SolverTrace"], None]


class SolverHooks:
    """Hook callbacks for branch-and-bound events.

    All hooks are optional and synchronous. A hook that raises is logged and
    skipped; it never aborts the solve.

    Attributes:
        on_solve_start: Called once with the surrogate system.
        on_iteration: Called with each new trace entry.
        on_incumbent: Called when a better vertex is found.
        on_solve_complete: Called with the finished trace.
    """

    def __init__(
        self,
        on_solve_start: SolveStartHook | None = None,
        on_iteration: IterationHook | None = None,
        on_incumbent: IncumbentHook | None = None,
        on_solve_complete: SolveCompleteHook | None = None,
    ) -> None:
        """Initialize solver hooks.

        Args:
            on_solve_start: Called once with the surrogate system.
            on_iteration: Called with each new trace entry.
            on_incumbent: Called when a better vertex is found.
            on_solve_complete: Called with the finished trace.
        """
        self.on_solve_start = on_solve_start
        self.on_iteration = on_iteration
        self.on_incumbent = on_incumbent
        self.on_solve_complete = on_solve_complete

    def trigger_solve_start(self, system: ConstraintSystem) -> None:
        if self.on_solve_start:
            self._call_hook(self.on_solve_start, system)

    def trigger_iteration(self, entry: TraceEntry) -> None:
        if self.on_iteration:
            self._call_hook(self.on_iteration, entry)

    def trigger_incumbent(self, vertex: BasicSolution, value: Fraction) -> None:
        if self.on_incumbent:
            self._call_hook(self.on_incumbent, vertex, value)

    def trigger_solve_complete(self, trace: SolverTrace) -> None:
        if self.on_solve_complete:
            self._call_hook(self.on_solve_complete, trace)

    @staticmethod
    def _call_hook(hook: Callable[..., Any], *args: Any) -> None:
        try:
            hook(*args)
        except Exception:
            logger.exception("Solver hook %s failed", getattr(hook, "__name__", repr(hook)))
