"""The graph matching quadratic objective and its convexification."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from birkhoff_gm.errors import DimensionMismatchError, SizeLimitError
from birkhoff_gm.objective.base import ConvexObjective, as_rational_matrix
from birkhoff_gm.objective.graph import AdjacencyMatrix, spectral_bound

# Keeps the continuity radius strictly below 1 even for tiny shifts.
DELTA_GUARD = Fraction(1, 1000)
MATERIALIZE_LIMIT = 6


class QuadraticObjective(ConvexObjective):
    """``f(x) = tr((E1 x)^T (x E2)) + mu * sum(x_ij^2)``.

    The quadratic part is ``vec(x)^T Q vec(x)`` with ``Q = E2 (x) E1``; adding
    ``mu`` above the spectral radius of Q makes f strictly convex while
    shifting every permutation matrix by exactly ``mu * n``.

    Attributes:
        e1: First graph.
        e2: Second graph.
        lambda_bound: Integer upper bound on the spectral radius of Q.
        mu: Convexification shift, ``lambda_bound + 1``.
    """

    is_integer_on_vertices = True
    nonnegative_hessian = True

    def __init__(self, e1: AdjacencyMatrix, e2: AdjacencyMatrix) -> None:
        if e1.n != e2.n:
            raise DimensionMismatchError(e1.n, e2.n, what="second graph")
        self.e1 = e1
        self.e2 = e2
        self.lambda_bound = spectral_bound(e1) * spectral_bound(e2)
        self.mu = self.lambda_bound + 1

    @property
    def n(self) -> int:
        return self.e1.n

    def evaluate(self, x: np.ndarray) -> Fraction:
        return eval_f(self, x)

    def gradient(self, x: np.ndarray) -> np.ndarray:
        x = as_rational_matrix(x, self.n)
        return 2 * (self.e1.entries @ x @ self.e2.entries) + 2 * self.mu * x

    def __repr__(self) -> str:
        return f"QuadraticObjective(n={self.n}, lambda_bound={self.lambda_bound}, mu={self.mu})"


def build_objective(e1: AdjacencyMatrix, e2: AdjacencyMatrix) -> QuadraticObjective:
    """Build the convexified matching objective for a graph pair.

    Raises:
        DimensionMismatchError: If the graphs have different orders.
    """
    return QuadraticObjective(e1, e2)


def eval_qform(obj: QuadraticObjective, x: np.ndarray) -> Fraction:
    """``tr((E1 x)^T (x E2))`` by matrix products, without forming Q."""
    x = as_rational_matrix(x, obj.n)
    left = obj.e1.entries @ x
    right = x @ obj.e2.entries
    return Fraction(sum((left * right).ravel(), Fraction(0)))


def eval_f(obj: QuadraticObjective, x: np.ndarray) -> Fraction:
    """Convexified objective: quadratic form plus ``mu * ||x||^2``."""
    x = as_rational_matrix(x, obj.n)
    return eval_qform(obj, x) + obj.mu * Fraction(sum((x * x).ravel(), Fraction(0)))


def ceil_sqrt(n: int) -> int:
    root = math.isqrt(n)
    return root if root * root == n else root + 1


def delta_for_quadratic(obj: QuadraticObjective) -> Fraction:
    """Radius within which f moves by less than 1/2 around a vertex.

    Uses ``ceil(sqrt(n))`` in place of ``sqrt(n)``, which only shrinks the radius.
    """
    s = ceil_sqrt(obj.n)
    return min(1 - DELTA_GUARD, Fraction(1, 4 * obj.mu * (2 * s + 1)))


def materialize_q(obj: QuadraticObjective) -> np.ndarray:
    """Form ``Q = E2 (x) E1`` explicitly (n^2 x n^2 integers).

    Q acts on column-major ``vec(x)``: ``x.flatten(order="F")``.

    Raises:
        SizeLimitError: If n exceeds the materialization limit.
    """
    if obj.n > MATERIALIZE_LIMIT:
        raise SizeLimitError(obj.n, MATERIALIZE_LIMIT)
    return np.kron(obj.e2.entries, obj.e1.entries)
