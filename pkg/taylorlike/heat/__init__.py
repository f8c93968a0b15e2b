"""Implicit schemes FD1 and FD2 for the 1-D heat equation."""

from taylorlike.heat.linalg import TridiagonalSystem, thomas_solve
from taylorlike.heat.problem import (
    PROBLEMS,
    GridConfig,
    HeatError,
    HeatProblem,
    SchemeKind,
    SingularSystemError,
    StateVector,
    StepBudgetError,
    StudyMode,
    constant_problem,
    initial_state,
    sine_problem,
    zero_problem,
)
from taylorlike.heat.runner import (
    ConvergenceRow,
    ConvergenceStudy,
    HeatRun,
    convergence_study,
    run,
    space_refinements,
    time_refinements,
)
from taylorlike.heat.schemes import (
    TimeDerivativeBounds,
    TimeDerivativeResiduals,
    amplification_factor,
    assemble_fd1,
    assemble_fd2,
    max_amplification,
    step,
    step_fd1,
    step_fd2,
    time_derivative_bound_comparison,
    time_derivative_residuals,
)

__all__ = [
    "PROBLEMS",
    "ConvergenceRow",
    "ConvergenceStudy",
    "GridConfig",
    "HeatError",
    "HeatProblem",
    "HeatRun",
    "SchemeKind",
    "SingularSystemError",
    "StateVector",
    "StepBudgetError",
    "StudyMode",
    "TimeDerivativeBounds",
    "TimeDerivativeResiduals",
    "TridiagonalSystem",
    "amplification_factor",
    "assemble_fd1",
    "assemble_fd2",
    "constant_problem",
    "convergence_study",
    "initial_state",
    "max_amplification",
    "run",
    "sine_problem",
    "space_refinements",
    "step",
    "step_fd1",
    "step_fd2",
    "thomas_solve",
    "time_derivative_bound_comparison",
    "time_derivative_residuals",
    "time_refinements",
    "zero_problem",
]
