"""Exhaustive vertex maximization, the reference for small instances."""

from __future__ import annotations

from fractions import Fraction

from birkhoff_gm.errors import DimensionMismatchError, SizeLimitError
from birkhoff_gm.objective.base import ConvexObjective
from birkhoff_gm.polytope import BasicSolution, ConstraintSystem, enumerate_vertices

ENUMERATION_LIMIT = 6


def brute_force_vertex_max(
    objective: ConvexObjective,
    system: ConstraintSystem,
) -> tuple[BasicSolution, Fraction]:
    """Evaluate the objective at every vertex and return a maximizer.

    Ties go to the lexicographically smallest value vector.

    Raises:
        SizeLimitError: If n exceeds the enumeration limit.
        DimensionMismatchError: If the objective and system sizes differ.
    """
    if system.n > ENUMERATION_LIMIT:
        raise SizeLimitError(system.n, ENUMERATION_LIMIT)
    if objective.n != system.n:
        raise DimensionMismatchError(system.n, objective.n, what="objective")

    best: tuple[BasicSolution, Fraction] | None = None
    for vertex in enumerate_vertices(system):
        value = objective.evaluate_values(vertex.values)
        if (
            best is None
            or value > best[1]
            or (value == best[1] and vertex.values < best[0].values)
        ):
            best = (vertex, value)
    assert best is not None
    return best
