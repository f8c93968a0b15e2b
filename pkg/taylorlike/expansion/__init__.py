"""Classical Taylor and Taylor-like first-order expansions with remainder bounds."""

from taylorlike.expansion.formulas import (
    ExpansionConfig,
    ExpansionError,
    ExpansionReport,
    Method,
    epsilon_bound_classical,
    epsilon_bound_like,
    epsilon_interval_classical,
    epsilon_interval_like,
    evaluate,
    sample_points,
    taylor_classical_approx,
    taylor_like_approx,
    weights,
)
from taylorlike.expansion.optimality import (
    WeightPerturbationResult,
    peano_remainder_bound,
    weight_perturbation_check,
)

__all__ = [
    "ExpansionConfig",
    "ExpansionError",
    "ExpansionReport",
    "Method",
    "WeightPerturbationResult",
    "epsilon_bound_classical",
    "epsilon_bound_like",
    "epsilon_interval_classical",
    "epsilon_interval_like",
    "evaluate",
    "peano_remainder_bound",
    "sample_points",
    "taylor_classical_approx",
    "taylor_like_approx",
    "weight_perturbation_check",
    "weights",
]
