"""Tests for the exhaustive graph-matching oracle."""

from __future__ import annotations

import pytest
from pydantic import ValidationError

from birkhoff_gm.errors import DimensionMismatchError, SizeLimitError
from birkhoff_gm.objective import AdjacencyMatrix, symmetric_difference
from birkhoff_gm.oracle import ORACLE_HARD_LIMIT, OracleConfig, OracleResult, oracle_gm, relabel_invariance
from birkhoff_gm.polytope import Permutation


class TestOracleGm:
    """Tests for oracle_gm."""

    def test_triangle_and_path(self, k3: AdjacencyMatrix, p3: AdjacencyMatrix) -> None:
        """Test every permutation keeps both path edges."""
        assert oracle_gm(k3, p3) == OracleResult(
            best_sigma=Permutation.identity(3),
            min_symdiff=1,
            max_qform=4,
            optimal_count=6,
        )

    def test_path_and_cycle(self, p4: AdjacencyMatrix, c4: AdjacencyMatrix) -> None:
        """Test the path embeds into the cycle in eight ways."""
        result = oracle_gm(p4, c4)

        assert result.min_symdiff == 1
        assert result.max_qform == 6
        assert result.optimal_count == 8
        assert result.best_sigma == Permutation.identity(4)

    def test_isomorphic_pair(self, p4: AdjacencyMatrix) -> None:
        """Test a relabelled copy is matched exactly."""
        pi = Permutation((3, 1, 4, 2))
        relabelled = p4.relabel(pi)

        result = oracle_gm(p4, relabelled)

        assert result.min_symdiff == 0
        assert result.optimal_count == 2
        assert symmetric_difference(p4, relabelled, result.best_sigma) == 0

    def test_edgeless(self, edgeless3: AdjacencyMatrix) -> None:
        """Test two empty graphs tie everywhere."""
        result = oracle_gm(edgeless3, edgeless3)

        assert result.max_qform == 0
        assert result.optimal_count == 6

    def test_order_mismatch(self, k3: AdjacencyMatrix, p4: AdjacencyMatrix) -> None:
        """Test both graphs need the same order."""
        with pytest.raises(DimensionMismatchError):
            oracle_gm(k3, p4)

    def test_respects_configured_limit(self, p4: AdjacencyMatrix, c4: AdjacencyMatrix) -> None:
        """Test a lower max_n refuses larger graphs."""
        with pytest.raises(SizeLimitError):
            oracle_gm(p4, c4, max_n=3)

    def test_hard_limit(self) -> None:
        """Test the hard limit cannot be raised."""
        big = AdjacencyMatrix.empty(ORACLE_HARD_LIMIT + 1)

        with pytest.raises(SizeLimitError):
            oracle_gm(big, big, max_n=20)


class TestRelabelInvariance:
    """Tests for relabel_invariance."""

    @pytest.mark.parametrize("pi", [Permutation((2, 1, 4, 3)), Permutation((4, 3, 2, 1)), Permutation((2, 3, 4, 1))])
    def test_values_survive_relabelling(self, p4: AdjacencyMatrix, c4: AdjacencyMatrix, pi: Permutation) -> None:
        """Test optimum values do not depend on vertex names."""
        assert relabel_invariance(p4, c4, pi)


class TestOracleConfig:
    """Tests for OracleConfig."""

    def test_default(self) -> None:
        """Test the default limit is the hard limit."""
        assert OracleConfig().max_n == ORACLE_HARD_LIMIT

    @pytest.mark.parametrize("max_n", [1, ORACLE_HARD_LIMIT + 1])
    def test_bounds(self, max_n: int) -> None:
        """Test max_n lies in [2, 10]."""
        with pytest.raises(ValidationError):
            OracleConfig(max_n=max_n)
