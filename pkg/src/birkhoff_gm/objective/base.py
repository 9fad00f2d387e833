"""Contract for objectives maximized over an assignment polytope."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Sequence
from fractions import Fraction
from functools import cached_property

import numpy as np

from birkhoff_gm._internal.rational import as_fraction
from birkhoff_gm.errors import DimensionMismatchError


def as_rational_matrix(x: np.ndarray | Sequence[Sequence[object]], n: int) -> np.ndarray:
    """Coerce a square point to an n x n object array of Fractions.

    Raises:
        DimensionMismatchError: If the shape is not n x n.
    """
    array = np.asarray(x, dtype=object)
    if array.shape != (n, n):
        raise DimensionMismatchError(n, array.shape[0] if array.ndim else 0, what="point")
    return np.vectorize(as_fraction, otypes=[object])(array)


class ConvexObjective(ABC):
    """A convex, continuous function on n x n matrices with exact values.

    Subclasses must return exact Fractions from :meth:`evaluate` and an n x n
    object array from :meth:`gradient`. ``is_integer_on_vertices`` declares
    that every permutation matrix has an integer value, which is what makes
    rounded upper bounds certificates.
    """

    is_integer_on_vertices: bool = False
    #: Quadratic with an entrywise non-negative Hessian; enables :meth:`drift_bound`.
    nonnegative_hessian: bool = False

    @property
    @abstractmethod
    def n(self) -> int:
        """Side length of the matrices the objective accepts."""

    @abstractmethod
    def evaluate(self, x: np.ndarray) -> Fraction:
        """Exact objective value at an n x n point."""

    @abstractmethod
    def gradient(self, x: np.ndarray) -> np.ndarray:
        """Exact gradient at an n x n point."""

    def evaluate_values(self, values: Sequence[Fraction]) -> Fraction:
        """Evaluate at a row-major n^2 vector."""
        return self.evaluate(self._reshape(values))

    def gradient_values(self, values: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Gradient at a row-major n^2 vector, flattened the same way."""
        return tuple(Fraction(g) for g in self.gradient(self._reshape(values)).ravel())

    def _reshape(self, values: Sequence[Fraction]) -> np.ndarray:
        if len(values) != self.n * self.n:
            raise DimensionMismatchError(self.n * self.n, len(values), what="value vector")
        return np.array(values, dtype=object).reshape(self.n, self.n)

    def drift_bound(self, values: Sequence[Fraction], radius: Fraction) -> Fraction | None:
        """Upper bound on ``f(x + d) - f(x)`` over every ``d`` with ``|d_ij| <= radius``.

        For a quadratic with non-negative Hessian entries the change is
        ``grad f(x) . d + q(d)`` with ``q(d) <= radius^2 q(J)``, J all ones.

        Returns:
            The bound, or None when the objective is not such a quadratic.
        """
        if not self.nonnegative_hessian:
            return None
        slope = sum((abs(g) for g in self.gradient_values(values)), Fraction(0))
        return radius * slope + radius * radius * self._curvature

    @cached_property
    def _curvature(self) -> Fraction:
        """``q(J)``: the quadratic part evaluated at the all-ones matrix."""
        size = self.n * self.n
        zero = (Fraction(0),) * size
        ones = (Fraction(1),) * size
        linear = sum(self.gradient_values(zero), Fraction(0))
        return self.evaluate_values(ones) - self.evaluate_values(zero) - linear
