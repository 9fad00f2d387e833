"""Objectives: the graph matching quadratic and a generic convex contract."""

from birkhoff_gm.objective.base import ConvexObjective, as_rational_matrix
from birkhoff_gm.objective.graph import (
    AdjacencyMatrix,
    frobenius_disagreement,
    spectral_bound,
    symmetric_difference,
)
from birkhoff_gm.objective.quadratic import (
    QuadraticObjective,
    build_objective,
    delta_for_quadratic,
    eval_f,
    eval_qform,
    materialize_q,
)
from birkhoff_gm.objective.separable import (
    SeparableQuadratic,
    diagonal_bias_objective,
    near_tie_objective,
)

__all__ = [
    "AdjacencyMatrix",
    "ConvexObjective",
    "QuadraticObjective",
    "SeparableQuadratic",
    "as_rational_matrix",
    "build_objective",
    "delta_for_quadratic",
    "diagonal_bias_objective",
    "eval_f",
    "eval_qform",
    "frobenius_disagreement",
    "materialize_q",
    "near_tie_objective",
    "spectral_bound",
    "symmetric_difference",
]
