"""Bases and basic solutions of an assignment system."""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from birkhoff_gm._internal.rational import SingularSystemError, is_integral, solve_square
from birkhoff_gm.errors import NotABasisError
from birkhoff_gm.polytope.system import ConstraintSystem, column_label

_MAX_SAMPLING_ATTEMPTS = 100_000


@dataclass(frozen=True)
class Basis:
    """An ordered selection of 2n-1 distinct columns.

    Attributes:
        columns: 0-based column indices, in the order they were chosen.
    """

    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.columns)) != len(self.columns):
            raise NotABasisError("basis columns must be distinct", columns=self.columns)
        if any(c < 0 for c in self.columns):
            raise NotABasisError("basis columns must be non-negative", columns=self.columns)

    def __iter__(self) -> Iterator[int]:
        return iter(self.columns)

    def __len__(self) -> int:
        return len(self.columns)

    def __contains__(self, column: object) -> bool:
        return column in self.columns

    @property
    def key(self) -> frozenset[int]:
        """Order-independent identity of the basis."""
        return frozenset(self.columns)

    def sorted(self) -> Basis:
        """Return the same basis with ascending columns."""
        return Basis(tuple(sorted(self.columns)))

    def labels(self, n: int) -> list[str]:
        """Variable names of the basic columns."""
        return [column_label(k, n) for k in self.columns]

    def validate_for(self, system: ConstraintSystem) -> None:
        """Check the basis has the right size and column range for a system.

        Raises:
            NotABasisError: If the size or a column index is wrong.
        """
        if len(self.columns) != system.rows:
            raise NotABasisError(
                f"basis has {len(self.columns)} columns, system has {system.rows} rows",
                columns=self.columns,
            )
        if any(c >= system.cols for c in self.columns):
            raise NotABasisError(
                f"basis column out of range 0..{system.cols - 1}",
                columns=self.columns,
            )


@dataclass(frozen=True)
class BasicSolution:
    """The unique solution of ``A_B x_B = rhs`` with non-basic entries at zero.

    Attributes:
        n: Side length of the assignment.
        values: Full row-major n^2 vector.
        basis: The basis that determined the solution.
        rhs: Right-hand side that was solved against.
        feasible: Whether every component is non-negative.
        degenerate: Whether the solution is feasible with a zero basic component.
        determinant: Determinant of the basis submatrix.
    """

    n: int
    values: tuple[Fraction, ...]
    basis: Basis
    rhs: tuple[Fraction, ...]
    feasible: bool
    degenerate: bool
    determinant: Fraction = field(compare=False)

    @property
    def basic_values(self) -> tuple[Fraction, ...]:
        """Values of the basic components, in basis order."""
        return tuple(self.values[k] for k in self.basis)

    @property
    def integral_rhs(self) -> bool:
        """Whether the right-hand side is integral."""
        return all(is_integral(b) for b in self.rhs)

    @property
    def is_integral(self) -> bool:
        """Whether every component is an integer."""
        return all(is_integral(v) for v in self.values)

    def as_matrix(self) -> np.ndarray:
        """Values as an n x n object array of Fractions."""
        return np.array(self.values, dtype=object).reshape(self.n, self.n)

    def support(self) -> tuple[int, ...]:
        """Columns with a nonzero value."""
        return tuple(k for k, v in enumerate(self.values) if v != 0)


def solve_basis(
    system: ConstraintSystem,
    basis: Basis,
    rhs: Sequence[Fraction] | None = None,
) -> BasicSolution:
    """Solve for the basic solution of a basis against an arbitrary right-hand side.

    Args:
        system: Supplies the coefficient matrix (and the default rhs).
        basis: The basic columns.
        rhs: Right-hand side to use instead of ``system.rhs``.

    Returns:
        The basic solution.

    Raises:
        NotABasisError: If the basis is malformed or singular.
    """
    basis.validate_for(system)
    b = tuple(Fraction(v) for v in (system.rhs if rhs is None else rhs))
    if len(b) != system.rows:
        raise NotABasisError(f"rhs has {len(b)} entries, system has {system.rows} rows")
    dense = system.dense_rows
    submatrix = [[row[k] for k in basis.columns] for row in dense]
    try:
        basic, det = solve_square(submatrix, b)
    except SingularSystemError as e:
        raise NotABasisError("basis submatrix is singular", columns=basis.columns, cause=e) from e

    values = [Fraction(0)] * system.cols
    for k, v in zip(basis.columns, basic, strict=True):
        values[k] = v
    feasible = all(v >= 0 for v in basic)
    return BasicSolution(
        n=system.n,
        values=tuple(values),
        basis=basis,
        rhs=b,
        feasible=feasible,
        degenerate=feasible and any(v == 0 for v in basic),
        determinant=det,
    )


def basic_solution(system: ConstraintSystem, basis: Basis) -> BasicSolution:
    """Solve ``A_B x_B = b`` for the system's own right-hand side.

    Raises:
        NotABasisError: If the basis is malformed or singular.
    """
    return solve_basis(system, basis)


def is_basis(system: ConstraintSystem, columns: Sequence[int]) -> bool:
    """Check whether columns form a nonsingular basis of the system."""
    try:
        solve_basis(system, Basis(tuple(columns)))
    except NotABasisError:
        return False
    return True


def random_basis(system: ConstraintSystem, rng: random.Random) -> Basis:
    """Draw a uniformly random column subset until it is a basis.

    Bases of the assignment system are spanning trees of the complete
    bipartite graph, so rejection sampling succeeds quickly for small n.

    Args:
        system: The system to draw columns from.
        rng: Seeded random source.

    Returns:
        A nonsingular basis (columns ascending).
    """
    for _ in range(_MAX_SAMPLING_ATTEMPTS):
        columns = tuple(sorted(rng.sample(range(system.cols), system.rows)))
        if is_basis(system, columns):
            return Basis(columns)
    raise NotABasisError(f"no basis found after {_MAX_SAMPLING_ATTEMPTS} draws")
