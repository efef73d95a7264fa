"""Entropy-bounded overset-domain formulation for 1D conservation laws."""

from overset1d._core import (
    AdmissibilityError,
    System,
    ValidationError,
    beta,
    conservation_residual,
    entropy_budget_B,
    make_system,
    penalty_u,
    penalty_v,
    run,
    run_convergence,
    run_equivalence,
    verify_fluxes,
)

__all__ = [
    "AdmissibilityError",
    "System",
    "ValidationError",
    "beta",
    "conservation_residual",
    "entropy_budget_B",
    "make_system",
    "penalty_u",
    "penalty_v",
    "run",
    "run_convergence",
    "run_equivalence",
    "verify_fluxes",
]
