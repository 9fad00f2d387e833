"""Tests for surrogate verification and perturbation sweeps."""

from __future__ import annotations

from fractions import Fraction

import pytest

from birkhoff_gm.errors import ConfigurationError, PerturbationRangeError
from birkhoff_gm.objective import AdjacencyMatrix, SeparableQuadratic, build_objective
from birkhoff_gm.polytope import Basis
from birkhoff_gm.solver import SolverOptions, reference_optimum, sweep_perturbations, verify_surrogate


class TestReferenceOptimum:
    """Tests for reference_optimum."""

    def test_graph_objective_uses_oracle(self, k3: AdjacencyMatrix, p3: AdjacencyMatrix) -> None:
        """Test max qform plus the diagonal shift."""
        assert reference_optimum(build_objective(k3, p3)) == 19

    def test_separable_objective_uses_enumeration(self, near_tie: SeparableQuadratic) -> None:
        """Test the identity wins the near tie."""
        assert reference_optimum(near_tie) == Fraction(1001, 500)


class TestVerifySurrogate:
    """Tests for verify_surrogate."""

    def test_large_t_breaks_equivalence(self, near_tie: SeparableQuadratic) -> None:
        """Test the surrogate basis restricts to the swap, which is not optimal."""
        check = verify_surrogate(near_tie, "999/2000")

        assert check.trace.is_optimal
        assert check.basis == Basis((0, 1, 2))
        assert check.restricted.values == (0, 1, 1, 0)
        assert check.restricted_value == Fraction(20012, 10000)
        assert check.reference_value == Fraction(1001, 500)
        assert not check.equivalent

    def test_smaller_t_restores_equivalence(self, near_tie: SeparableQuadratic) -> None:
        """Test halving t recovers the identity."""
        check = verify_surrogate(near_tie, Fraction(999, 4000))

        assert check.basis == Basis((0, 2, 3))
        assert check.restricted.values == (1, 0, 0, 1)
        assert check.restricted_value == check.reference_value
        assert check.equivalent

    def test_requires_t_without_certified_bound(self, near_tie: SeparableQuadratic) -> None:
        """Test separable objectives need an explicit t."""
        with pytest.raises(ConfigurationError):
            verify_surrogate(near_tie)

    def test_rejects_t_outside_interval(self, near_tie: SeparableQuadratic) -> None:
        """Test t must lie in (0, 1/n)."""
        with pytest.raises(PerturbationRangeError):
            verify_surrogate(near_tie, Fraction(1, 2))

    @pytest.mark.slow
    def test_certified_t_for_graphs(self, k3: AdjacencyMatrix, p3: AdjacencyMatrix) -> None:
        """Test the certified t keeps the restricted basis integral and optimal."""
        check = verify_surrogate(build_objective(k3, p3), options=SolverOptions(max_iterations=60))

        assert check.t == Fraction(1, 3000)
        assert check.restricted.feasible
        assert check.restricted.is_integral
        assert check.restricted_value == 19


class TestSweepPerturbations:
    """Tests for sweep_perturbations."""

    def test_near_tie_sweep(self, near_tie: SeparableQuadratic) -> None:
        """Test equivalence fails at the first step and holds after halving."""
        checks = sweep_perturbations(near_tie, 2)

        assert [c.t for c in checks] == [Fraction(999, 2000), Fraction(999, 4000)]
        assert [c.equivalent for c in checks] == [False, True]

    def test_needs_a_step(self, near_tie: SeparableQuadratic) -> None:
        """Test an empty sweep is a configuration error."""
        with pytest.raises(ConfigurationError):
            sweep_perturbations(near_tie, 0)
