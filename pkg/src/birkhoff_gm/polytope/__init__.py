"""Birkhoff polytope, its perturbed surrogate, bases and vertices."""

from birkhoff_gm.polytope.basis import (
    BasicSolution,
    Basis,
    basic_solution,
    is_basis,
    random_basis,
    solve_basis,
)
from birkhoff_gm.polytope.permutation import Permutation, bfs_to_permutation
from birkhoff_gm.polytope.system import (
    ConstraintSystem,
    build_birkhoff,
    build_perturbed,
    column_index,
    column_label,
    column_pair,
)
from birkhoff_gm.polytope.unimodular import check_tu_minors
from birkhoff_gm.polytope.vertices import (
    anchor_basis,
    cluster_anchor,
    count_feasible_bases,
    enumerate_cluster,
    enumerate_vertices,
)

__all__ = [
    "BasicSolution",
    "Basis",
    "ConstraintSystem",
    "Permutation",
    "anchor_basis",
    "basic_solution",
    "bfs_to_permutation",
    "build_birkhoff",
    "build_perturbed",
    "check_tu_minors",
    "cluster_anchor",
    "column_index",
    "column_label",
    "column_pair",
    "count_feasible_bases",
    "enumerate_cluster",
    "enumerate_vertices",
    "is_basis",
    "random_basis",
    "solve_basis",
]
