"""Bound traces produced by the branch-and-bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from birkhoff_gm.polytope import BasicSolution, Basis

SolveStatus = Literal["optimal", "iteration-limit"]


@dataclass(frozen=True)
class TraceEntry:
    """Global bounds after one iteration.

    Attributes:
        iteration: 0 for the root, then one per processed simplex.
        upper_bound: Upper bound on the surrogate optimum.
        incumbent_value: Best vertex value found so far.
        open_nodes: Simplices still waiting to be processed.
    """

    iteration: int
    upper_bound: Fraction
    incumbent_value: Fraction
    open_nodes: int = 0


@dataclass
class SolverTrace:
    """Record of a solve: bound history plus the best vertex found.

    The upper bounds never increase and the incumbents never decrease.

    Attributes:
        iterations: Bound history, one entry per iteration.
        final_basis: Basis of the best vertex.
        final_vertex: Best vertex of the surrogate.
        status: ``optimal`` when the bound met the incumbent.
        nodes_created: Simplices whose bound was computed.
    """

    iterations: list[TraceEntry] = field(default_factory=list)
    final_basis: Basis | None = None
    final_vertex: BasicSolution | None = None
    status: SolveStatus = "iteration-limit"
    nodes_created: int = 0

    def record(
        self,
        iteration: int,
        upper_bound: Fraction,
        incumbent_value: Fraction,
        open_nodes: int = 0,
    ) -> TraceEntry:
        """Append an entry, clamping so the upper bound never increases."""
        if self.iterations:
            upper_bound = min(upper_bound, self.iterations[-1].upper_bound)
        entry = TraceEntry(iteration, upper_bound, incumbent_value, open_nodes)
        self.iterations.append(entry)
        return entry

    @property
    def upper_bound(self) -> Fraction:
        """Latest upper bound."""
        return self.iterations[-1].upper_bound

    @property
    def incumbent_value(self) -> Fraction:
        """Latest incumbent value."""
        return self.iterations[-1].incumbent_value

    @property
    def iteration_count(self) -> int:
        """Number of processed simplices."""
        return self.iterations[-1].iteration if self.iterations else 0

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"
