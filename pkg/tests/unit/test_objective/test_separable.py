"""Tests for separable quadratic objectives."""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest

from birkhoff_gm.errors import DimensionMismatchError
from birkhoff_gm.objective import SeparableQuadratic, as_rational_matrix, diagonal_bias_objective
from birkhoff_gm.polytope import Permutation


class TestSeparableQuadratic:
    """Tests for SeparableQuadratic."""

    def test_evaluate_and_gradient(self) -> None:
        """Test value and gradient of a small instance."""
        objective = SeparableQuadratic([[2, 0], [0, 1]], [[1, 0], [0, -1]])
        x = [[Fraction(1, 2), 0], [0, 3]]

        assert objective.evaluate(x) == Fraction(2, 4) + Fraction(1, 2) + 9 - 3
        assert objective.gradient(x).tolist() == [[3, 0], [0, 5]]

    def test_linear_defaults_to_zero(self) -> None:
        """Test the linear term is optional."""
        objective = SeparableQuadratic([[1, 1], [1, 1]])

        assert objective.evaluate_values(Permutation.identity(2).to_values()) == 2
        assert not objective.is_integer_on_vertices

    def test_rejects_negative_curvature(self) -> None:
        """Test non-convex coefficients are refused."""
        with pytest.raises(ValueError, match="non-convex"):
            SeparableQuadratic([[1, -1], [1, 1]])

    def test_rejects_non_square(self) -> None:
        """Test the coefficient matrix must be square."""
        with pytest.raises(ValueError, match="square"):
            SeparableQuadratic([[1, 1, 1], [1, 1, 1]])

    def test_rejects_mismatched_linear_term(self) -> None:
        """Test the linear term must match the quadratic one."""
        with pytest.raises(DimensionMismatchError):
            SeparableQuadratic([[1, 1], [1, 1]], [[0, 0, 0]] * 3)


class TestNearTie:
    """Tests for the near-tie objective."""

    def test_vertex_values(self, near_tie: SeparableQuadratic) -> None:
        """Test the identity beats the swap by 8/10000."""
        identity = near_tie.evaluate_values(Permutation((1, 2)).to_values())
        swap = near_tie.evaluate_values(Permutation((2, 1)).to_values())

        assert identity == Fraction(2002, 1000)
        assert swap == Fraction(20012, 10000)
        assert identity - swap == Fraction(8, 10000)

    def test_name(self, near_tie: SeparableQuadratic) -> None:
        """Test the report label."""
        assert near_tie.name == "near-tie"
        assert near_tie.n == 2


class TestDiagonalBias:
    """Tests for the diagonal-bias objective."""

    def test_identity_is_unique_optimum(self, diagonal_bias: SeparableQuadratic) -> None:
        """Test every other permutation scores strictly less."""
        identity = diagonal_bias.evaluate_values(Permutation.identity(3).to_values())
        assert identity == Fraction(303, 100)
        for images in itertools.permutations((1, 2, 3)):
            if images == (1, 2, 3):
                continue
            assert diagonal_bias.evaluate_values(Permutation(images).to_values()) < identity

    def test_other_sizes(self) -> None:
        """Test the factory honours n."""
        assert diagonal_bias_objective(4).n == 4


class TestAsRationalMatrix:
    """Tests for as_rational_matrix."""

    def test_converts_entries(self) -> None:
        """Test integers and strings become Fractions."""
        matrix = as_rational_matrix([[1, "1/2"], [np.int64(0), Fraction(3, 4)]], 2)

        assert matrix.dtype == object
        assert all(isinstance(v, Fraction) for v in matrix.ravel())
        assert matrix[0, 1] == Fraction(1, 2)

    def test_rejects_shape(self) -> None:
        """Test the shape must be n x n."""
        with pytest.raises(DimensionMismatchError):
            as_rational_matrix([[1, 0, 0]], 3)
