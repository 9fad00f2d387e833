"""Exact LP engine and convex maximization by branch-and-bound."""

from birkhoff_gm.solver.brute import brute_force_vertex_max
from birkhoff_gm.solver.certificate import GapCertificate, certify_gap
from birkhoff_gm.solver.config import SearchStrategy, SolverOptions, SubdivisionRule, TieBreak
from birkhoff_gm.solver.hooks import SolverHooks
from birkhoff_gm.solver.lp import LpResult, TableauOutcome, simplex_maximize, solve_lp
from birkhoff_gm.solver.maximize import maximize_convex
from birkhoff_gm.solver.trace import SolverTrace, SolveStatus, TraceEntry
from birkhoff_gm.solver.verify import (
    SurrogateCheck,
    reference_optimum,
    sweep_perturbations,
    verify_surrogate,
)

__all__ = [
    "GapCertificate",
    "LpResult",
    "SolveStatus",
    "SolverHooks",
    "SearchStrategy",
    "SolverOptions",
    "SolverTrace",
    "SubdivisionRule",
    "SurrogateCheck",
    "TableauOutcome",
    "TieBreak",
    "TraceEntry",
    "brute_force_vertex_max",
    "certify_gap",
    "maximize_convex",
    "reference_optimum",
    "simplex_maximize",
    "solve_lp",
    "sweep_perturbations",
    "verify_surrogate",
]
