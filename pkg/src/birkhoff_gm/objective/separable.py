"""Separable convex quadratics: ``sum(q_ij x_ij^2 + l_ij x_ij)``."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from birkhoff_gm._internal.rational import RationalLike
from birkhoff_gm.objective.base import ConvexObjective, as_rational_matrix


class SeparableQuadratic(ConvexObjective):
    """Entrywise quadratic with non-negative curvature, hence convex.

    Args:
        quadratic: n x n non-negative coefficients of ``x_ij^2``.
        linear: n x n coefficients of ``x_ij`` (zero if omitted).
        name: Label used in reports.
    """

    nonnegative_hessian = True

    def __init__(
        self,
        quadratic: Sequence[Sequence[RationalLike]],
        linear: Sequence[Sequence[RationalLike]] | None = None,
        *,
        name: str = "separable",
    ) -> None:
        q = np.asarray(quadratic, dtype=object)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise ValueError(f"quadratic coefficients must be square, got shape {q.shape}")
        self._n = int(q.shape[0])
        self.quadratic = as_rational_matrix(q, self._n)
        if any(c < 0 for c in self.quadratic.ravel()):
            raise ValueError("negative curvature makes the objective non-convex")
        self.linear = (
            as_rational_matrix(linear, self._n)
            if linear is not None
            else as_rational_matrix(np.zeros((self._n, self._n), dtype=int), self._n)
        )
        self.name = name

    @property
    def n(self) -> int:
        return self._n

    def evaluate(self, x: np.ndarray) -> Fraction:
        x = as_rational_matrix(x, self.n)
        return Fraction(sum((self.quadratic * x * x + self.linear * x).ravel(), Fraction(0)))

    def gradient(self, x: np.ndarray) -> np.ndarray:
        x = as_rational_matrix(x, self.n)
        return 2 * self.quadratic * x + self.linear

    def __repr__(self) -> str:
        return f"SeparableQuadratic(name={self.name!r}, n={self.n})"


def near_tie_objective() -> SeparableQuadratic:
    """n = 2 objective whose surrogate optimum moves for a large perturbation.

    ``f = 3/5000 (x12 + x21) + 1001/1000 (x11^2 + x22^2) + x12^2 + x21^2``.
    """
    heavy = Fraction(1001, 1000)
    tilt = Fraction(3, 5000)
    return SeparableQuadratic(
        [[heavy, 1], [1, heavy]],
        [[0, tilt], [tilt, 0]],
        name="near-tie",
    )


def diagonal_bias_objective(n: int = 3) -> SeparableQuadratic:
    """``f = 101/100 sum(x_ii^2) + sum_{i != j} x_ij^2``; the identity is the unique optimum."""
    bias = Fraction(101, 100)
    return SeparableQuadratic(
        [[bias if i == j else 1 for j in range(n)] for i in range(n)],
        name="diagonal-bias",
    )
