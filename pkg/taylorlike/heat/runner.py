"""Time integration to a final time and convergence studies."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np
from loguru import logger

from taylorlike.heat.problem import (
    GridConfig,
    HeatError,
    HeatProblem,
    SchemeKind,
    StateVector,
    StepBudgetError,
    StudyMode,
    initial_state,
)
from taylorlike.heat.schemes import step
from taylorlike.utils.helpers import observed_order

DEFAULT_MAX_STEPS = 10_000_000
GEOMETRIC_TOL = 1e-12
NORM_SLACK = 1e-14


@dataclass
class HeatRun:
    """Outcome of integrating a heat problem to its final time."""

    grid: GridConfig
    scheme: SchemeKind
    T: float
    steps: int
    final: StateVector
    norms: list[float] = field(default_factory=list)  # max-norm at every time level
    states: Optional[list[StateVector]] = None
    max_error: Optional[float] = None
    l1_error: Optional[float] = None

    @property
    def lam(self) -> float:
        return self.grid.lam

    @property
    def norms_non_increasing(self) -> bool:
        """Max-norm never grows by more than roundoff (relative to the initial norm)."""
        slack = NORM_SLACK * max(self.norms[0], 1.0)
        return all(b <= a + slack for a, b in zip(self.norms[:-1], self.norms[1:]))


def step_count(T: float, k: float) -> int:
    """Number of steps to reach T, the last one possibly shortened."""
    return max(1, math.ceil(T / k - 1e-9))


def run(
    problem: HeatProblem,
    grid: GridConfig,
    scheme: SchemeKind,
    max_steps: int = DEFAULT_MAX_STEPS,
    keep_states: bool = False,
) -> HeatRun:
    """
    Integrate from t = 0 to problem.T.

    Time levels are t_n = min(n·k, T); the last step is shortened to land
    exactly on T and uses its own λ. When the exact solution is known the
    max-norm and h-weighted L¹ errors at T are recorded.

    Raises:
        StepBudgetError: If more than ``max_steps`` steps would be needed.
    """
    scheme = SchemeKind(scheme)
    steps = step_count(problem.T, grid.k)
    if steps > max_steps:
        raise StepBudgetError(
            f"step budget exceeded: T/k needs {steps} steps, limit is {max_steps}"
        )

    state = initial_state(problem, grid)
    norms = [state.max_norm]
    states = [state] if keep_states else None
    for n in range(1, steps + 1):
        t_next = problem.T if n == steps else min(n * grid.k, problem.T)
        state = step(scheme, state, grid, problem, dt=t_next - state.t)
        state = replace(state, t=t_next)
        norms.append(state.max_norm)
        if states is not None:
            states.append(state)

    result = HeatRun(
        grid=grid,
        scheme=scheme,
        T=problem.T,
        steps=steps,
        final=state,
        norms=norms,
        states=states,
    )
    if problem.exact is not None:
        error = state.values - np.asarray(problem.exact(grid.nodes, problem.T), dtype=float)
        result.max_error = float(np.max(np.abs(error)))
        result.l1_error = grid.h * math.fsum(np.abs(error))

    logger.debug(
        f"{scheme.value} run on {problem.name}: J={grid.J}, k={grid.k:.4g}, "
        f"λ={grid.lam:.4g}, steps={steps}, max_error={result.max_error}"
    )
    return result


# ── Convergence studies ───────────────────────────────────────────


def space_refinements(J_values: list[int], lam: float) -> list[GridConfig]:
    """Grids at fixed λ, one per J."""
    return [GridConfig.from_lambda(J, lam) for J in J_values]


def time_refinements(J: int, k_values: list[float]) -> list[GridConfig]:
    """Grids at fixed h, one per k."""
    return [GridConfig(J=J, k=k) for k in k_values]


@dataclass(frozen=True)
class ConvergenceRow:
    J: int
    h: float
    k: float
    lam: float
    max_error: float
    l1_error: float
    order_max: Optional[float] = None
    order_l1: Optional[float] = None


@dataclass
class ConvergenceStudy:
    scheme: SchemeKind
    mode: StudyMode
    rows: list[ConvergenceRow]

    @property
    def orders(self) -> list[float]:
        """Observed max-norm orders between consecutive rows."""
        return [row.order_max for row in self.rows[1:] if row.order_max is not None]


def _relative_gap(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b))


def _check_geometric(refinements: list[GridConfig], mode: StudyMode) -> None:
    for coarse, fine in zip(refinements[:-1], refinements[1:]):
        if mode is StudyMode.SPACE:
            halved = fine.J + 1 == 2 * (coarse.J + 1)
            fixed = _relative_gap(coarse.lam, fine.lam) <= GEOMETRIC_TOL
            detail = f"J+1 must double at fixed lambda, got J={coarse.J}→{fine.J}"
        else:
            halved = _relative_gap(coarse.k, 2 * fine.k) <= GEOMETRIC_TOL
            fixed = coarse.J == fine.J
            detail = f"k must halve at fixed J, got k={coarse.k:.6g}→{fine.k:.6g}, J={coarse.J}→{fine.J}"
        if not (halved and fixed):
            raise HeatError(f"refinements are not geometric: {detail}")


def convergence_study(
    problem: HeatProblem,
    scheme: SchemeKind,
    refinements: list[GridConfig],
    mode: StudyMode,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> ConvergenceStudy:
    """
    Run every grid and report observed orders log₂(e_coarse / e_fine).

    Refinements are ordered coarse to fine; the first row carries no order.
    """
    if problem.exact is None:
        raise HeatError("missing exact solution: a convergence study needs problem.exact")
    if not refinements:
        raise HeatError("convergence study needs at least one grid")
    mode = StudyMode(mode)
    _check_geometric(refinements, mode)

    rows: list[ConvergenceRow] = []
    for grid in refinements:
        result = run(problem, grid, scheme, max_steps=max_steps)
        previous = rows[-1] if rows else None
        rows.append(
            ConvergenceRow(
                J=grid.J,
                h=grid.h,
                k=grid.k,
                lam=grid.lam,
                max_error=result.max_error,
                l1_error=result.l1_error,
                order_max=observed_order(previous.max_error, result.max_error) if previous else None,
                order_l1=observed_order(previous.l1_error, result.l1_error) if previous else None,
            )
        )

    study = ConvergenceStudy(scheme=SchemeKind(scheme), mode=mode, rows=rows)
    logger.info(f"{study.scheme.value} {mode.value} study on {problem.name}: orders {study.orders}")
    return study
