"""Equality systems of the Birkhoff polytope and its perturbed surrogate."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from birkhoff_gm._internal.rational import RationalLike, as_fraction
from birkhoff_gm.errors import InvalidDimensionError, PerturbationRangeError


def column_index(i: int, j: int, n: int) -> int:
    """Map a 1-indexed variable pair (i, j) to its 0-based column.

    Column order is row-major: x11, x12, ..., x1n, x21, ...
    """
    return (i - 1) * n + (j - 1)


def column_pair(k: int, n: int) -> tuple[int, int]:
    """Map a 0-based column to its 1-indexed variable pair (i, j)."""
    i, j = divmod(k, n)
    return i + 1, j + 1


def column_label(k: int, n: int) -> str:
    """Human-readable name of a column, e.g. ``x23``."""
    i, j = column_pair(k, n)
    if n < 10:
        return f"x{i}{j}"
    return f"x{i},{j}"


@dataclass(frozen=True)
class ConstraintSystem:
    """The (2n-1) x n^2 equality system ``Ax = b`` of an assignment polytope.

    Rows ``0..n-1`` are the row sums, rows ``n..2n-2`` the column sums for
    ``j = 1..n-1``. The column sum for ``j = n`` is linearly dependent and is
    always the omitted one. With ``t > 0`` the row sums are ``1 - t`` and the
    implied last column sum is ``1 - nt``.

    Attributes:
        n: Side length of the assignment.
        t: Perturbation magnitude (0 for the unperturbed polytope).
        rhs: Exact right-hand side, one entry per row.
        matrix: Read-only 0/1 coefficient matrix.
    """

    n: int
    t: Fraction
    rhs: tuple[Fraction, ...]
    matrix: np.ndarray = field(compare=False, repr=False)

    @property
    def rows(self) -> int:
        """Number of equality constraints (2n - 1)."""
        return 2 * self.n - 1

    @property
    def cols(self) -> int:
        """Number of variables (n^2)."""
        return self.n * self.n

    @property
    def perturbed(self) -> bool:
        """Whether this is a surrogate system (t > 0)."""
        return self.t > 0

    @cached_property
    def column_map(self) -> dict[int, tuple[int, int]]:
        """Bijection from 0-based column to 1-indexed variable pair."""
        return {k: column_pair(k, self.n) for k in range(self.cols)}

    @cached_property
    def row_supports(self) -> tuple[tuple[int, ...], ...]:
        """Columns with a 1 in each row."""
        return tuple(tuple(int(k) for k in np.flatnonzero(row)) for row in self.matrix)

    @cached_property
    def dense_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        """Coefficient rows as exact rationals."""
        return tuple(tuple(Fraction(int(a)) for a in row) for row in self.matrix)

    def implied_last_column_sum(self) -> Fraction:
        """Right-hand side of the omitted column constraint (1 - nt)."""
        return 1 - self.n * self.t

    def is_feasible(self, values: Sequence[Fraction]) -> bool:
        """Check a point against every constraint, including the omitted one.

        Args:
            values: Row-major n^2 vector.

        Returns:
            True if the point lies in the polytope.
        """
        if len(values) != self.cols or any(v < 0 for v in values):
            return False
        for support, b in zip(self.row_supports, self.rhs, strict=True):
            if sum(values[k] for k in support) != b:
                return False
        last = sum(values[column_index(i, self.n, self.n)] for i in range(1, self.n + 1))
        return last == self.implied_last_column_sum()

    def describe(self) -> list[str]:
        """Render each constraint as text, e.g. ``x11 + x12 = 1``."""
        lines = []
        for support, b in zip(self.row_supports, self.rhs, strict=True):
            lhs = " + ".join(column_label(k, self.n) for k in support)
            lines.append(f"{lhs} = {b}")
        return lines


def _coefficient_matrix(n: int) -> np.ndarray:
    matrix = np.zeros((2 * n - 1, n * n), dtype=np.int8)
    for i in range(n):
        matrix[i, i * n : (i + 1) * n] = 1
    for j in range(n - 1):
        matrix[n + j, j::n] = 1
    matrix.flags.writeable = False
    return matrix


def _check_dimension(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidDimensionError(n)


def _build(n: int, t: Fraction) -> ConstraintSystem:
    rhs = tuple([1 - t] * n + [Fraction(1)] * (n - 1))
    return ConstraintSystem(n=n, t=t, rhs=rhs, matrix=_coefficient_matrix(n))


def build_birkhoff(n: int) -> ConstraintSystem:
    """Build the unperturbed Birkhoff system (all-ones right-hand side).

    Args:
        n: Side length, at least 2.

    Returns:
        The system with t = 0.

    Raises:
        InvalidDimensionError: If n < 2.
    """
    _check_dimension(n)
    return _build(n, Fraction(0))


def build_perturbed(n: int, t: RationalLike) -> ConstraintSystem:
    """Build the non-degenerate surrogate system for 0 < t < 1/n.

    Args:
        n: Side length, at least 2.
        t: Perturbation magnitude.

    Returns:
        The system with row sums 1 - t.

    Raises:
        InvalidDimensionError: If n < 2.
        PerturbationRangeError: If t is outside (0, 1/n).
    """
    _check_dimension(n)
    t = as_fraction(t)
    if not 0 < t < Fraction(1, n):
        raise PerturbationRangeError(t, n)
    return _build(n, t)
