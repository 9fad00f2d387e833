"""birkhoff-gm: exact graph matching by convex maximization over a perturbed Birkhoff polytope.

Example:
    >>> from birkhoff_gm import AdjacencyMatrix, build_objective, certified_parameters
    >>> objective = build_objective(AdjacencyMatrix.complete(3), AdjacencyMatrix.path(3))
    >>> certified_parameters(objective).t
    Fraction(1, 3000)
"""

from importlib.metadata import PackageNotFoundError, version

from birkhoff_gm.config import BirkhoffSettings
from birkhoff_gm.errors import BirkhoffError
from birkhoff_gm.objective import (
    AdjacencyMatrix,
    ConvexObjective,
    QuadraticObjective,
    build_objective,
    eval_f,
    eval_qform,
)
from birkhoff_gm.oracle import OracleResult, oracle_gm
from birkhoff_gm.polytope import (
    BasicSolution,
    Basis,
    ConstraintSystem,
    Permutation,
    basic_solution,
    bfs_to_permutation,
    build_birkhoff,
    build_perturbed,
    enumerate_vertices,
)
from birkhoff_gm.sensitivity import certified_parameters, restrict_basis, t_bound
from birkhoff_gm.solver import (
    SolverOptions,
    SolverTrace,
    brute_force_vertex_max,
    certify_gap,
    maximize_convex,
    solve_lp,
    verify_surrogate,
)

try:
    __version__ = version("birkhoff-gm")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "AdjacencyMatrix",
    "BasicSolution",
    "Basis",
    "BirkhoffError",
    "BirkhoffSettings",
    "ConstraintSystem",
    "ConvexObjective",
    "OracleResult",
    "Permutation",
    "QuadraticObjective",
    "SolverOptions",
    "SolverTrace",
    "__version__",
    "basic_solution",
    "bfs_to_permutation",
    "brute_force_vertex_max",
    "build_birkhoff",
    "build_objective",
    "build_perturbed",
    "certified_parameters",
    "certify_gap",
    "enumerate_vertices",
    "eval_f",
    "eval_qform",
    "maximize_convex",
    "oracle_gm",
    "restrict_basis",
    "solve_lp",
    "t_bound",
    "verify_surrogate",
]
