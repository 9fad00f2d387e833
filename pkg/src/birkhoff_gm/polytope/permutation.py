"""Permutations and their permutation-matrix vertices."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from birkhoff_gm.errors import NotAVertexError
from birkhoff_gm.polytope.basis import BasicSolution


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}``, stored as its 1-indexed images.

    The associated vertex has ``x[i][sigma(i)] = 1``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        """The identity permutation of order n."""
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_zero_based(cls, images: Sequence[int]) -> Permutation:
        """Build from 0-indexed images (as produced by ``itertools.permutations``)."""
        return cls(tuple(i + 1 for i in images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """Return ``self o other`` (apply ``other`` first)."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def to_values(self) -> tuple[Fraction, ...]:
        """Row-major n^2 vector of the permutation matrix."""
        values = [Fraction(0)] * (self.n * self.n)
        for i, image in enumerate(self.images):
            values[i * self.n + image - 1] = Fraction(1)
        return tuple(values)

    def to_matrix(self) -> np.ndarray:
        """Integer permutation matrix."""
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        for i, image in enumerate(self.images):
            matrix[i, image - 1] = 1
        return matrix

    def __str__(self) -> str:
        return "[" + " ".join(str(i) for i in self.images) + "]"


def bfs_to_permutation(solution: BasicSolution) -> Permutation:
    """Read the permutation off a basic solution of the unperturbed system.

    Args:
        solution: A basic solution solved against the all-ones rhs.

    Returns:
        The permutation with ``x[i][sigma(i)] = 1``.

    Raises:
        NotAVertexError: If the rhs is perturbed or the values are not a
            permutation matrix.
    """
    if any(b != 1 for b in solution.rhs):
        raise NotAVertexError("permutation readout requires the unperturbed system (t = 0)")
    n = solution.n
    images: list[int] = []
    for i in range(n):
        row = solution.values[i * n : (i + 1) * n]
        if any(v not in (0, 1) for v in row):
            raise NotAVertexError(f"row {i + 1} has a non-binary entry: {[str(v) for v in row]}")
        ones = [j for j, v in enumerate(row) if v == 1]
        if len(ones) != 1:
            raise NotAVertexError(f"row {i + 1} has {len(ones)} unit entries")
        images.append(ones[0] + 1)
    try:
        return Permutation(tuple(images))
    except ValueError as e:
        raise NotAVertexError("values repeat a column, not a permutation matrix", cause=e) from e
