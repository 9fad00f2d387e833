"""Simple undirected graphs as adjacency matrices."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from birkhoff_gm.errors import DimensionMismatchError, InvalidGraphError
from birkhoff_gm.polytope import Permutation


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Adjacency matrix of a simple undirected graph on vertices 1..n.

    Attributes:
        entries: Read-only symmetric 0/1 matrix with zero diagonal.
    """

    entries: np.ndarray = field(compare=False)

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.int64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InvalidGraphError(f"adjacency matrix must be square, got shape {entries.shape}")
        if not np.isin(entries, (0, 1)).all():
            raise InvalidGraphError("adjacency entries must be 0 or 1")
        if np.diagonal(entries).any():
            i = int(np.flatnonzero(np.diagonal(entries))[0]) + 1
            raise InvalidGraphError(f"self-loop at vertex {i}")
        if not (entries == entries.T).all():
            raise InvalidGraphError("adjacency matrix must be symmetric")
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> AdjacencyMatrix:
        return cls(np.array(rows, dtype=np.int64))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> AdjacencyMatrix:
        """Build from 1-indexed edges; each edge is added in both directions.

        Raises:
            InvalidGraphError: If an endpoint is out of range or an edge is a loop.
        """
        entries = np.zeros((n, n), dtype=np.int64)
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidGraphError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            entries[u - 1, v - 1] = entries[v - 1, u - 1] = 1
        return cls(entries)

    @classmethod
    def complete(cls, n: int) -> AdjacencyMatrix:
        return cls(np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64))

    @classmethod
    def path(cls, n: int) -> AdjacencyMatrix:
        return cls.from_edges(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def cycle(cls, n: int) -> AdjacencyMatrix:
        return cls.from_edges(n, [*((i, i + 1) for i in range(1, n)), (n, 1)])

    @classmethod
    def empty(cls, n: int) -> AdjacencyMatrix:
        return cls(np.zeros((n, n), dtype=np.int64))

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def edge_count(self) -> int:
        return int(self.entries.sum()) // 2

    def edges(self) -> set[frozenset[int]]:
        """Edges as 1-indexed unordered pairs."""
        rows, cols = np.nonzero(np.triu(self.entries))
        return {frozenset((int(i) + 1, int(j) + 1)) for i, j in zip(rows, cols, strict=True)}

    def relabel(self, sigma: Permutation) -> AdjacencyMatrix:
        """Rename vertex i to sigma(i): edge {i, j} becomes {sigma(i), sigma(j)}."""
        _check_same_order(self.n, sigma.n, "permutation")
        p = sigma.to_matrix()
        return AdjacencyMatrix(p.T @ self.entries @ p)

    def to_rows(self) -> list[list[int]]:
        return self.entries.tolist()


def _check_same_order(expected: int, actual: int, what: str) -> None:
    if expected != actual:
        raise DimensionMismatchError(expected, actual, what=what)


def spectral_bound(e: AdjacencyMatrix) -> int:
    """Largest row sum, an upper bound on the spectral radius."""
    if e.n == 0:
        return 0
    return int(e.entries.sum(axis=1).max())


def symmetric_difference(e1: AdjacencyMatrix, e2: AdjacencyMatrix, sigma: Permutation) -> int:
    """Size of the edge symmetric difference after relabelling ``e1`` by ``sigma``.

    Raises:
        DimensionMismatchError: If the orders differ.
    """
    _check_same_order(e1.n, e2.n, "second graph")
    return len(e1.relabel(sigma).edges() ^ e2.edges())


def frobenius_disagreement(e1: AdjacencyMatrix, e2: AdjacencyMatrix, sigma: Permutation) -> int:
    """Squared Frobenius norm of ``E1 x - x E2`` at sigma's permutation matrix.

    Counts ordered adjacency disagreements, so it is twice the symmetric difference.
    """
    _check_same_order(e1.n, e2.n, "second graph")
    x = sigma.to_matrix()
    diff = e1.entries @ x - x @ e2.entries
    return int((diff * diff).sum())
