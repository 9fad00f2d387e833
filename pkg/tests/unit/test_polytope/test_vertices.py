"""Tests for vertex enumeration."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from birkhoff_gm.errors import DegeneracyHazardError, DimensionMismatchError
from birkhoff_gm.objective import diagonal_bias_objective
from birkhoff_gm.polytope import (
    ConstraintSystem,
    Permutation,
    anchor_basis,
    bfs_to_permutation,
    build_birkhoff,
    build_perturbed,
    cluster_anchor,
    count_feasible_bases,
    enumerate_cluster,
    enumerate_vertices,
)
from birkhoff_gm.sensitivity import restrict_basis


class TestAnchorBasis:
    """Tests for anchor_basis."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_size(self, n: int) -> None:
        """Test the anchor has 2n-1 columns."""
        assert len(anchor_basis(n)) == 2 * n - 1

    def test_columns_for_three(self) -> None:
        """Test x11, x22 and the full last row."""
        assert anchor_basis(3).columns == (0, 4, 6, 7, 8)


class TestEnumerateVertices:
    """Tests for enumerate_vertices."""

    @pytest.mark.parametrize(("n", "count"), [(2, 2), (3, 6)])
    def test_birkhoff_vertices_are_permutations(self, n: int, count: int) -> None:
        """Test the unperturbed polytope has n! vertices, all permutation matrices."""
        vertices = list(enumerate_vertices(build_birkhoff(n)))

        assert len(vertices) == count
        assert len({v.values for v in vertices}) == count
        assert all(v.feasible and v.is_integral for v in vertices)
        assert len({bfs_to_permutation(v) for v in vertices}) == count

    def test_two_by_two_surrogate_is_a_segment(self) -> None:
        """Test the n = 2 surrogate has exactly two vertices."""
        t = Fraction(1, 10)
        vertices = {v.values for v in enumerate_vertices(build_perturbed(2, t))}

        assert vertices == {
            (t, 1 - 2 * t, 1 - t, 0),
            (1 - t, 0, t, 1 - 2 * t),
        }

    def test_surrogate_is_non_degenerate(self, perturbed3: ConstraintSystem) -> None:
        """Test every surrogate vertex has exactly one feasible basis."""
        vertices = list(enumerate_vertices(perturbed3))

        assert all(v.feasible and not v.degenerate for v in vertices)
        assert all(perturbed3.is_feasible(v.values) for v in vertices)
        assert len(vertices) == count_feasible_bases(perturbed3)
        assert len(vertices) >= 6

    def test_degenerate_vertices_have_many_bases(self, birkhoff3: ConstraintSystem) -> None:
        """Test the unperturbed polytope has more feasible bases than vertices."""
        assert count_feasible_bases(birkhoff3) > 6

    def test_anchor_vertex_comes_first(self, perturbed3: ConstraintSystem) -> None:
        """Test enumeration starts from the lifted identity."""
        first = next(enumerate_vertices(perturbed3))

        assert first.basis.key == anchor_basis(3).key

    @pytest.mark.slow
    def test_four_by_four(self) -> None:
        """Test 24 vertices for n = 4."""
        vertices = list(enumerate_vertices(build_birkhoff(4)))

        assert len(vertices) == 24


def _permutations(n: int) -> list[Permutation]:
    return [Permutation.from_zero_based(images) for images in itertools.permutations(range(n))]


class TestVertexClusters:
    """Tests for cluster_anchor and enumerate_cluster."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_identity_anchor(self, n: int) -> None:
        """Test the identity cluster starts at the anchor basis."""
        assert cluster_anchor(Permutation.identity(n)).key == anchor_basis(n).key

    def test_swap_anchor(self) -> None:
        """Test the swap keeps x21 and the whole first row."""
        assert cluster_anchor(Permutation((2, 1))).key == frozenset({0, 1, 2})

    def test_clusters_partition_the_vertices(self, perturbed3: ConstraintSystem) -> None:
        """Test every surrogate vertex lies in exactly one cluster."""
        members = [values for sigma in _permutations(3) for _, values in enumerate_cluster(perturbed3, sigma)]

        assert len(members) == len(set(members))
        assert set(members) == {v.values for v in enumerate_vertices(perturbed3)}

    @pytest.mark.parametrize("n", [3, 4])
    def test_members_restrict_to_their_permutation(self, n: int) -> None:
        """Test cluster vertices are feasible and within n t of sigma."""
        t = Fraction(1, 10 * n)
        system = build_perturbed(n, t)
        for sigma in _permutations(n)[:6]:
            corner = sigma.to_values()
            for basis, values in enumerate_cluster(system, sigma):
                assert system.is_feasible(values)
                assert restrict_basis(basis, system).values == corner
                assert all(abs(v - c) <= n * t for v, c in zip(values, corner, strict=True))

    def test_drift_bound_covers_the_cluster(self, perturbed3: ConstraintSystem) -> None:
        """Test no cluster vertex exceeds f(sigma) plus the drift bound."""
        objective = diagonal_bias_objective(3)
        radius = 3 * perturbed3.t
        for sigma in _permutations(3):
            corner = sigma.to_values()
            ceiling = objective.evaluate_values(corner) + objective.drift_bound(corner, radius)
            for _, values in enumerate_cluster(perturbed3, sigma):
                assert objective.evaluate_values(values) <= ceiling

    def test_refuses_unperturbed_system(self, birkhoff3: ConstraintSystem) -> None:
        """Test clusters need t > 0."""
        with pytest.raises(DegeneracyHazardError):
            next(enumerate_cluster(birkhoff3, Permutation.identity(3)))

    def test_refuses_order_mismatch(self, perturbed3: ConstraintSystem) -> None:
        """Test the permutation order must match the system."""
        with pytest.raises(DimensionMismatchError):
            next(enumerate_cluster(perturbed3, Permutation.identity(2)))
