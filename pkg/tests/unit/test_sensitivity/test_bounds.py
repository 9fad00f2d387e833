"""Tests for certified perturbation parameters."""

from __future__ import annotations

from fractions import Fraction

import pytest

from birkhoff_gm.errors import ConfigurationError, InvalidDeltaError
from birkhoff_gm.objective import AdjacencyMatrix, build_objective
from birkhoff_gm.sensitivity import (
    PerturbationParams,
    certified_parameters,
    round_upper_bound,
    t_bound,
    worst_case_parameters,
)


class TestTBound:
    """Tests for t_bound."""

    def test_half_the_supremum(self) -> None:
        """Test delta / (2n(2n-1))."""
        assert t_bound(Fraction(1, 100), 3) == Fraction(1, 3000)
        assert t_bound("1/20", 3) == Fraction(1, 600)

    @pytest.mark.parametrize("delta", [Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(3, 2)])
    def test_rejects_delta_outside_unit_interval(self, delta: Fraction) -> None:
        """Test delta must lie strictly between 0 and 1."""
        with pytest.raises(InvalidDeltaError):
            t_bound(delta, 3)

    def test_stays_inside_non_degeneracy_interval(self) -> None:
        """Test t < 1/n for every admissible delta."""
        for n in range(2, 8):
            assert t_bound(Fraction(999, 1000), n) < Fraction(1, n)


class TestRoundUpperBound:
    """Tests for round_upper_bound."""

    @pytest.mark.parametrize(
        ("bound", "expected"),
        [(Fraction(37, 2), 19), (Fraction(19), 19), (Fraction(18001, 1000), 19), ("-1/2", 0)],
    )
    def test_ceiling(self, bound: Fraction | str, expected: int) -> None:
        """Test rounding up to the next integer."""
        assert round_upper_bound(bound) == expected


class TestCertifiedParameters:
    """Tests for certified_parameters and worst_case_parameters."""

    def test_triangle_and_path(self, k3: AdjacencyMatrix, p3: AdjacencyMatrix) -> None:
        """Test the full chain for K3 against P3."""
        params = certified_parameters(build_objective(k3, p3))

        assert params == PerturbationParams(
            n=3, mu=5, lambda_bound=4, delta_hat=Fraction(1, 100), t=Fraction(1, 3000)
        )

    def test_edgeless(self, edgeless3: AdjacencyMatrix) -> None:
        """Test the chain for two edgeless graphs."""
        params = certified_parameters(build_objective(edgeless3, edgeless3))

        assert params.mu == 1
        assert params.delta_hat == Fraction(1, 20)
        assert params.t == Fraction(1, 600)

    def test_worst_case_uses_complete_graphs(self) -> None:
        """Test the order-only parameters equal those of two complete graphs."""
        assert worst_case_parameters(3).t == Fraction(1, 3000)
        params = worst_case_parameters(4)
        assert params.mu == 10
        assert params.delta_hat == Fraction(1, 200)
        assert params.t == Fraction(1, 11200)

    def test_worst_case_dominates(self, p4: AdjacencyMatrix, c4: AdjacencyMatrix) -> None:
        """Test any pair's t is at least the worst case."""
        assert certified_parameters(build_objective(p4, c4)).t >= worst_case_parameters(4).t


class TestPerturbationParams:
    """Tests for PerturbationParams validation."""

    def test_shift_must_exceed_bound(self) -> None:
        """Test mu > lambda_bound."""
        with pytest.raises(ConfigurationError, match="shift"):
            PerturbationParams(n=3, mu=4, lambda_bound=4, delta_hat=Fraction(1, 100), t=Fraction(1, 3000))

    def test_delta_in_unit_interval(self) -> None:
        """Test delta_hat in (0, 1)."""
        with pytest.raises(InvalidDeltaError):
            PerturbationParams(n=3, mu=5, lambda_bound=4, delta_hat=Fraction(1), t=Fraction(1, 3000))

    def test_t_below_supremum(self) -> None:
        """Test t < delta / (n(2n-1))."""
        with pytest.raises(ConfigurationError, match="basis-preserving"):
            PerturbationParams(n=3, mu=5, lambda_bound=4, delta_hat=Fraction(1, 100), t=Fraction(1, 1500))
