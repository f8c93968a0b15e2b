"""
Implicit finite-difference steps for u_t = u_xx.

FD1 (backward Euler):

    (1+2λ)ũ_j⁽ⁿ⁺¹⁾ − λũ_{j−1}⁽ⁿ⁺¹⁾ − λũ_{j+1}⁽ⁿ⁺¹⁾ = ũ_j⁽ⁿ⁾

FD2 (Taylor-like, n = 1 weights on the time derivative):

    −λ/2·ũ_{j−1}⁽ⁿ⁺¹⁾ + (1+λ)ũ_j⁽ⁿ⁺¹⁾ − λ/2·ũ_{j+1}⁽ⁿ⁺¹⁾
        = λ/2·(ũ_{j−1}⁽ⁿ⁾ + ũ_{j+1}⁽ⁿ⁾) + (1−λ)ũ_j⁽ⁿ⁾
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from loguru import logger

from taylorlike.heat.linalg import TridiagonalSystem, thomas_solve
from taylorlike.heat.problem import (
    GridConfig,
    HeatError,
    HeatProblem,
    SchemeKind,
    SpaceTimeFunction,
    StateVector,
)

DEFAULT_THETA_SAMPLES = 1000


def _check_state(state: StateVector, grid: GridConfig) -> None:
    if state.values.size != grid.J:
        raise HeatError(f"state has {state.values.size} values, grid expects J={grid.J}")


def _step_size(grid: GridConfig, dt: float | None) -> float:
    dt = grid.k if dt is None else dt
    if not dt > 0:
        raise HeatError(f"time step must be positive, got {dt}")
    return dt


# ── Assembly ──────────────────────────────────────────────────────


def assemble_fd1(
    state: StateVector, grid: GridConfig, problem: HeatProblem, dt: float | None = None
) -> TridiagonalSystem:
    """FD1 system for the step from state.t to state.t + dt."""
    _check_state(state, grid)
    dt = _step_size(grid, dt)
    lam = dt / grid.h**2
    t_next = state.t + dt
    off = np.full(grid.J - 1, -lam)
    rhs = state.values.copy()
    rhs[0] += lam * problem.bc_left(t_next)
    rhs[-1] += lam * problem.bc_right(t_next)
    return TridiagonalSystem(sub=off, diag=np.full(grid.J, 1 + 2 * lam), sup=off, rhs=rhs)


def assemble_fd2(
    state: StateVector, grid: GridConfig, problem: HeatProblem, dt: float | None = None
) -> TridiagonalSystem:
    """FD2 system; boundary neighbours use bc(t) on the right-hand side and bc(t + dt) on the left."""
    _check_state(state, grid)
    dt = _step_size(grid, dt)
    lam = dt / grid.h**2
    t_next = state.t + dt
    padded = np.concatenate(([problem.bc_left(state.t)], state.values, [problem.bc_right(state.t)]))
    rhs = (1 - lam) * state.values + lam / 2 * (padded[:-2] + padded[2:])
    rhs[0] += lam / 2 * problem.bc_left(t_next)
    rhs[-1] += lam / 2 * problem.bc_right(t_next)
    off = np.full(grid.J - 1, -lam / 2)
    return TridiagonalSystem(sub=off, diag=np.full(grid.J, 1 + lam), sup=off, rhs=rhs)


# ── Steps ─────────────────────────────────────────────────────────


def step_fd1(
    state: StateVector, grid: GridConfig, problem: HeatProblem, dt: float | None = None
) -> StateVector:
    """Advance one backward-Euler step (k, or dt when given)."""
    system = assemble_fd1(state, grid, problem, dt)
    return StateVector(t=state.t + _step_size(grid, dt), values=thomas_solve(system))


def step_fd2(
    state: StateVector, grid: GridConfig, problem: HeatProblem, dt: float | None = None
) -> StateVector:
    """Advance one FD2 step (k, or dt when given)."""
    system = assemble_fd2(state, grid, problem, dt)
    return StateVector(t=state.t + _step_size(grid, dt), values=thomas_solve(system))


STEPPERS = {SchemeKind.FD1: step_fd1, SchemeKind.FD2: step_fd2}


def step(
    scheme: SchemeKind,
    state: StateVector,
    grid: GridConfig,
    problem: HeatProblem,
    dt: float | None = None,
) -> StateVector:
    return STEPPERS[SchemeKind(scheme)](state, grid, problem, dt)


# ── Von Neumann analysis ──────────────────────────────────────────


def amplification_factor(
    scheme: SchemeKind, lam: float, theta: float | np.ndarray
) -> float | np.ndarray:
    """
    Growth factor of the Fourier mode e^{ijθ} on ℝ.

    With X = 2λ·sin²(θ/2): FD2 gives (1−X)/(1+X), FD1 gives 1/(1+2X).
    """
    if not lam > 0:
        raise HeatError(f"lambda must be positive, got {lam}")
    x = 2 * lam * np.sin(np.asarray(theta, dtype=float) / 2) ** 2
    if SchemeKind(scheme) is SchemeKind.FD2:
        factor = (1 - x) / (1 + x)
    else:
        factor = 1 / (1 + 2 * x)
    return float(factor) if np.ndim(factor) == 0 else factor


def max_amplification(scheme: SchemeKind, lam: float, samples: int = DEFAULT_THETA_SAMPLES) -> float:
    """max |A| over θ sampled uniformly in [0, 2π]."""
    theta = np.linspace(0.0, 2 * np.pi, samples)
    return float(np.max(np.abs(amplification_factor(scheme, lam, theta))))


# ── Time-derivative error bounds ──────────────────────────────────


@dataclass(frozen=True)
class TimeDerivativeBounds:
    """Backward-difference bound next to the Taylor-like one."""

    k: float
    m2: float
    M2: float
    bound_classical: float
    bound_new: float
    ratio: float


def time_derivative_bound_comparison(k: float, m2: float, M2: float) -> TimeDerivativeBounds:
    """
    bound_new = (k/4)(M₂ − m₂), bound_classical = (k/2)·max(|m₂|, |M₂|).

    For 0 ≤ m₂ ≤ M₂ the ratio is Λ/(2(m₂ + Λ)) ≤ 1/2; for m₂ < 0 it is
    reported without a check.
    """
    if not k > 0:
        raise HeatError(f"k must be positive, got {k}")
    if m2 > M2:
        raise HeatError(f"m2 must not exceed M2, got m2={m2}, M2={M2}")
    bound_new = k / 4 * (M2 - m2)
    bound_classical = k / 2 * max(abs(m2), abs(M2))
    ratio = 0.0 if bound_classical == 0 else bound_new / bound_classical
    if m2 >= 0 and not (bound_new <= bound_classical and ratio <= 0.5):
        raise HeatError(f"bound comparison broken for k={k}, m2={m2}, M2={M2}")
    return TimeDerivativeBounds(
        k=k, m2=m2, M2=M2, bound_classical=bound_classical, bound_new=bound_new, ratio=ratio
    )


@dataclass(frozen=True)
class TimeDerivativeResiduals:
    """Largest measured time-derivative consistency errors over the given nodes."""

    classical: float  # |ε⁽ᵀ⁾ₙ| of the backward difference
    taylor_like: float  # |2εₙ| of the two-point Taylor-like formula


def time_derivative_residuals(
    exact: SpaceTimeFunction,
    exact_t: SpaceTimeFunction,
    x: np.ndarray,
    t: float,
    k: float,
) -> TimeDerivativeResiduals:
    """
    Consistency errors of the time discretisations applied to the exact solution:

        ε⁽ᵀ⁾ₙ = u_t(t) − (u(t+k) − u(t))/k
        2εₙ  = 2(u(t+k) − u(t))/k − u_t(t) − u_t(t+k)
    """
    if not k > 0:
        raise HeatError(f"k must be positive, got {k}")
    x = np.asarray(x, dtype=float)
    difference = (np.asarray(exact(x, t + k)) - np.asarray(exact(x, t))) / k
    ut0, ut1 = np.asarray(exact_t(x, t)), np.asarray(exact_t(x, t + k))
    classical = float(np.max(np.abs(ut0 - difference)))
    taylor_like = float(np.max(np.abs(2 * difference - ut0 - ut1)))
    logger.debug(f"Time-derivative residuals at t={t:.4g}, k={k:.4g}: {classical:.3e} / {taylor_like:.3e}")
    return TimeDerivativeResiduals(classical=classical, taylor_like=taylor_like)
