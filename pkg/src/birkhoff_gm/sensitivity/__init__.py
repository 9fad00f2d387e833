"""Perturbation bounds, vertex lifting and rhs sensitivity."""

from birkhoff_gm.sensitivity.bounds import (
    PerturbationParams,
    certified_parameters,
    round_upper_bound,
    t_bound,
    worst_case_parameters,
)
from birkhoff_gm.sensitivity.lift import lift_vertex, restrict_basis
from birkhoff_gm.sensitivity.trials import (
    InfeasibilityClass,
    SensitivityOutcome,
    SensitivityTrial,
    classify_infeasibility,
    make_sensitivity_trial,
    perturb_and_resolve,
    random_sensitivity_trial,
)

__all__ = [
    "InfeasibilityClass",
    "PerturbationParams",
    "SensitivityOutcome",
    "SensitivityTrial",
    "certified_parameters",
    "classify_infeasibility",
    "lift_vertex",
    "make_sensitivity_trial",
    "perturb_and_resolve",
    "random_sensitivity_trial",
    "restrict_basis",
    "round_upper_bound",
    "t_bound",
    "worst_case_parameters",
]
