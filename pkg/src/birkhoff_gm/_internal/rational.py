"""Exact rational helpers shared by the polytope, simplex and CLI layers."""

from __future__ import annotations

import numbers
import re
from collections.abc import Sequence
from fractions import Fraction

RationalLike = Fraction | int | str

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class SingularSystemError(ValueError):
    """Raised when an exact elimination meets a zero pivot column."""


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce a value to an exact Fraction.

    Accepts Fractions, ints, and strings of the form ``"p/q"``, ``"p"`` or a
    finite decimal such as ``"0.4995"``. Floats are rejected: they would smuggle
    binary rounding into an exact pipeline.

    Args:
        value: Value to convert.

    Returns:
        The exact rational.

    Raises:
        TypeError: If value is a float or an unsupported type.
        ValueError: If a string cannot be parsed or has a zero denominator.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if match:
            numerator, denominator = match.groups()
            if denominator is not None and int(denominator) == 0:
                raise ValueError(f"zero denominator in {value!r}")
            return Fraction(int(numerator), int(denominator or 1))
        try:
            return Fraction(value.strip())
        except ValueError as e:
            raise ValueError(f"not an exact rational: {value!r}") from e
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_fraction(value: Fraction | int) -> str:
    """Serialize a rational as ``"p/q"`` (always with an explicit denominator)."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def is_integral(value: Fraction | int) -> bool:
    """Check whether a rational is an integer."""
    return Fraction(value).denominator == 1


def pivot(tableau: list[list[Fraction]], row: int, col: int) -> None:
    """Pivot a tableau in place on ``tableau[row][col]``.

    After the call column ``col`` is the unit vector ``e_row``.
    """
    pivot_row = tableau[row]
    p = pivot_row[col]
    if p != 1:
        tableau[row] = pivot_row = [entry / p for entry in pivot_row]
    for r, other in enumerate(tableau):
        if r == row:
            continue
        factor = other[col]
        if factor:
            tableau[r] = [a - factor * b for a, b in zip(other, pivot_row, strict=True)]


def solve_square(
    matrix: Sequence[Sequence[Fraction | int]],
    rhs: Sequence[Fraction | int],
) -> tuple[list[Fraction], Fraction]:
    """Solve a square system exactly by Gauss-Jordan elimination.

    Args:
        matrix: Square coefficient matrix (row major).
        rhs: Right-hand side.

    Returns:
        Tuple of (solution, determinant of matrix).

    Raises:
        SingularSystemError: If the matrix is singular.
    """
    size = len(matrix)
    augmented = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    det = Fraction(1)
    for col in range(size):
        # First nonzero entry keeps the elimination deterministic.
        pivot_row = next((r for r in range(col, size) if augmented[r][col] != 0), None)
        if pivot_row is None:
            raise SingularSystemError(f"zero pivot in column {col}")
        if pivot_row != col:
            augmented[col], augmented[pivot_row] = augmented[pivot_row], augmented[col]
            det = -det
        det *= augmented[col][col]
        pivot(augmented, col, col)
    return [augmented[r][size] for r in range(size)], det


def canonical_form(
    matrix: Sequence[Sequence[Fraction | int]],
    rhs: Sequence[Fraction | int],
    columns: Sequence[int],
) -> tuple[list[list[Fraction]], list[int]]:
    """Bring ``[matrix | rhs]`` into canonical form for the given basic columns.

    Each basic column is pivoted on the first unassigned row with a nonzero
    entry, so the result does not depend on the order rows were written in.

    Args:
        matrix: Coefficient rows.
        rhs: Right-hand side.
        columns: Basic columns, one per row.

    Returns:
        Tuple of (tableau with the rhs as last column, basic column per row).

    Raises:
        SingularSystemError: If the columns are linearly dependent.
    """
    tableau = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    basic_of_row = [-1] * len(tableau)
    for col in columns:
        row = next(
            (r for r in range(len(tableau)) if basic_of_row[r] < 0 and tableau[r][col] != 0),
            None,
        )
        if row is None:
            raise SingularSystemError(f"column {col} is dependent on earlier columns")
        pivot(tableau, row, col)
        basic_of_row[row] = col
    return tableau, basic_of_row
