"""Exact two-phase tableau simplex with Bland's rule."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from birkhoff_gm._internal.rational import RationalLike, as_fraction, pivot
from birkhoff_gm.errors import BirkhoffError, DimensionMismatchError
from birkhoff_gm.polytope import BasicSolution, Basis, ConstraintSystem, solve_basis

logger = logging.getLogger(__name__)

LpStatus = Literal["optimal", "infeasible", "unbounded"]


@dataclass(frozen=True)
class TableauOutcome:
    """Result of :func:`simplex_maximize` on a plain standard-form problem.

    Attributes:
        status: Termination status.
        value: Optimal objective value (0 unless optimal).
        values: Primal solution, one entry per column.
        basis: Basic column of each surviving row.
        reduced_costs: ``c_j - z_j`` per column; all <= 0 at optimality.
        dropped_rows: Rows found redundant during phase 1.
        pivots: Total pivots over both phases.
    """

    status: LpStatus
    value: Fraction
    values: tuple[Fraction, ...]
    basis: tuple[int, ...]
    reduced_costs: tuple[Fraction, ...]
    dropped_rows: tuple[int, ...] = ()
    pivots: int = 0


def _objective_row(
    rows: list[list[Fraction]],
    basis: list[int],
    costs: Sequence[Fraction],
) -> list[Fraction]:
    # z_j - c_j for every column, current value in the last slot
    width = len(rows[0]) - 1
    row = [
        sum((costs[basis[r]] * rows[r][j] for r in range(len(rows))), Fraction(0)) - costs[j]
        for j in range(width)
    ]
    row.append(sum((costs[basis[r]] * rows[r][-1] for r in range(len(rows))), Fraction(0)))
    return row


def _iterate(table: list[list[Fraction]], basis: list[int]) -> tuple[LpStatus, int]:
    """Run Bland's rule on ``table`` (objective row last) until it stops."""
    pivots = 0
    constraint_rows = len(table) - 1
    width = len(table[0]) - 1
    while True:
        objective = table[-1]
        entering = next((j for j in range(width) if objective[j] < 0), None)
        if entering is None:
            return "optimal", pivots
        candidates = [
            (table[r][-1] / table[r][entering], basis[r], r)
            for r in range(constraint_rows)
            if table[r][entering] > 0
        ]
        if not candidates:
            return "unbounded", pivots
        # Smallest ratio, then smallest leaving column.
        _, _, leaving = min(candidates)
        pivot(table, leaving, entering)
        basis[leaving] = entering
        pivots += 1


def simplex_maximize(
    matrix: Sequence[Sequence[RationalLike]],
    rhs: Sequence[RationalLike],
    costs: Sequence[RationalLike],
) -> TableauOutcome:
    """Maximize ``c x`` subject to ``A x = b``, ``x >= 0`` in exact arithmetic.

    Phase 1 starts from one artificial column per row. Artificials left at
    zero in the basis are pivoted out; a row where that is impossible is
    redundant and is dropped.

    Args:
        matrix: Constraint rows.
        rhs: Right-hand side.
        costs: Objective coefficients.

    Returns:
        The tableau outcome.
    """
    m = len(matrix)
    width = len(costs)
    costs_q = [as_fraction(c) for c in costs]
    rows: list[list[Fraction]] = []
    for i, (row, b) in enumerate(zip(matrix, rhs, strict=True)):
        if len(row) != width:
            raise DimensionMismatchError(width, len(row), what=f"constraint row {i}")
        coefficients = [as_fraction(a) for a in row]
        b_q = as_fraction(b)
        if b_q < 0:
            coefficients = [-a for a in coefficients]
            b_q = -b_q
        rows.append(coefficients + [Fraction(int(r == i)) for r in range(m)] + [b_q])

    basis = [width + i for i in range(m)]
    phase_one_costs = [Fraction(0)] * width + [Fraction(-1)] * m
    table = [*rows, _objective_row(rows, basis, phase_one_costs)]
    _, pivots = _iterate(table, basis)
    if table[-1][-1] < 0:
        logger.debug("simplex phase 1 infeasible", extra={"pivots": pivots})
        return TableauOutcome(
            status="infeasible",
            value=Fraction(0),
            values=tuple([Fraction(0)] * width),
            basis=(),
            reduced_costs=tuple([Fraction(0)] * width),
            pivots=pivots,
        )

    dropped: list[int] = []
    for r in range(m):
        if basis[r] < width:
            continue
        column = next((j for j in range(width) if table[r][j] != 0), None)
        if column is None:
            dropped.append(r)
            continue
        pivot(table, r, column)
        basis[r] = column
        pivots += 1

    kept = [r for r in range(m) if r not in dropped]
    rows = [table[r][:width] + [table[r][-1]] for r in kept]
    basis = [basis[r] for r in kept]
    table = [*rows, _objective_row(rows, basis, costs_q)]
    status, phase_two_pivots = _iterate(table, basis)
    pivots += phase_two_pivots

    values = [Fraction(0)] * width
    for r, column in enumerate(basis):
        values[column] = table[r][-1]
    logger.debug(
        "simplex finished",
        extra={"status": status, "pivots": pivots, "dropped_rows": len(dropped)},
    )
    return TableauOutcome(
        status=status,
        value=table[-1][-1] if status == "optimal" else Fraction(0),
        values=tuple(values),
        basis=tuple(basis),
        reduced_costs=tuple(-table[-1][j] for j in range(width)),
        dropped_rows=tuple(dropped),
        pivots=pivots,
    )


@dataclass(frozen=True)
class LpResult:
    """Linear program over an assignment system.

    Attributes:
        status: Termination status.
        optimal_value: Optimal value when optimal.
        solution: Optimal basic feasible solution when optimal.
        basis: Optimal basis when optimal.
        reduced_costs: ``c_j - z_j`` per column; none positive at optimality.
    """

    status: LpStatus
    optimal_value: Fraction | None
    solution: BasicSolution | None
    basis: Basis | None
    reduced_costs: tuple[Fraction, ...] = ()


def solve_lp(system: ConstraintSystem, c: Sequence[RationalLike]) -> LpResult:
    """Maximize ``c x`` over the polytope of an assignment system.

    Args:
        system: Birkhoff or surrogate system.
        c: Row-major n^2 objective coefficients.

    Returns:
        The LP result; valid systems are never infeasible or unbounded.

    Raises:
        DimensionMismatchError: If c has the wrong length.
    """
    if len(c) != system.cols:
        raise DimensionMismatchError(system.cols, len(c), what="objective vector")
    outcome = simplex_maximize(system.dense_rows, system.rhs, c)
    if outcome.status != "optimal":
        return LpResult(status=outcome.status, optimal_value=None, solution=None, basis=None)
    if outcome.dropped_rows:
        raise BirkhoffError(
            "assignment system lost full row rank during phase 1",
            details={"dropped_rows": list(outcome.dropped_rows)},
        )
    basis = Basis(tuple(sorted(outcome.basis)))
    solution = solve_basis(system, basis)
    return LpResult(
        status="optimal",
        optimal_value=outcome.value,
        solution=solution,
        basis=basis,
        reduced_costs=outcome.reduced_costs,
    )
