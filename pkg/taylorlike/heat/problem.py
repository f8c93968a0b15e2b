"""Heat problem u_t = u_xx on [0, 1] with Dirichlet data, and its discretisation grid."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

SpaceFunction = Callable[[np.ndarray | float], np.ndarray | float]
TimeFunction = Callable[[float], float]
SpaceTimeFunction = Callable[[np.ndarray | float, float], np.ndarray | float]

COMPATIBILITY_TOL = 1e-12


class HeatError(Exception):
    """Raised for invalid heat problems, grids or studies."""


class SingularSystemError(HeatError):
    """Raised when a tridiagonal solve meets a near-zero pivot."""


class StepBudgetError(HeatError):
    """Raised when a run would need more time steps than allowed."""


class SchemeKind(str, Enum):
    FD1 = "fd1"  # backward Euler
    FD2 = "fd2"  # Taylor-like implicit scheme


class StudyMode(str, Enum):
    SPACE = "space"  # refine h at fixed λ
    TIME = "time"  # refine k at fixed h


@dataclass(frozen=True)
class HeatProblem:
    """Initial data, boundary data and (optionally) the exact solution."""

    initial: SpaceFunction
    bc_left: TimeFunction
    bc_right: TimeFunction
    T: float
    exact: Optional[SpaceTimeFunction] = None
    exact_t: Optional[SpaceTimeFunction] = None  # ∂u/∂t, for consistency residuals
    utt_bounds: Optional[tuple[float, float]] = None  # m₂, M₂ of ∂²u/∂t² over [0,1]×[0,T]
    name: str = "custom"

    def __post_init__(self) -> None:
        if not self.T > 0:
            raise HeatError(f"final time T must be positive, got {self.T}")
        left = float(self.initial(0.0)) - float(self.bc_left(0.0))
        right = float(self.initial(1.0)) - float(self.bc_right(0.0))
        if abs(left) > COMPATIBILITY_TOL or abs(right) > COMPATIBILITY_TOL:
            raise HeatError(
                f"incompatible data: initial values and boundary values differ at t=0 "
                f"(left {left:.3e}, right {right:.3e})"
            )
        if self.utt_bounds is not None and self.utt_bounds[0] > self.utt_bounds[1]:
            raise HeatError(f"invalid u_tt bounds {self.utt_bounds}")


@dataclass(frozen=True)
class GridConfig:
    """J interior nodes (h = 1/(J+1)) and time step k."""

    J: int
    k: float

    def __post_init__(self) -> None:
        if isinstance(self.J, bool) or int(self.J) != self.J or self.J < 1:
            raise HeatError(f"J must be a positive integer, got {self.J}")
        if not self.k > 0 or not math.isfinite(self.k):
            raise HeatError(f"time step k must be positive, got {self.k}")

    @classmethod
    def from_lambda(cls, J: int, lam: float) -> GridConfig:
        """Grid with k = λ·h²."""
        if not lam > 0:
            raise HeatError(f"lambda must be positive, got {lam}")
        return cls(J=J, k=lam / (J + 1) ** 2)

    @property
    def h(self) -> float:
        return 1.0 / (self.J + 1)

    @property
    def lam(self) -> float:
        """Parabolic mesh ratio λ = k/h²."""
        return self.k * (self.J + 1) ** 2

    @property
    def nodes(self) -> np.ndarray:
        """Interior nodes x_j = j·h, j = 1..J."""
        return np.arange(1, self.J + 1, dtype=float) / (self.J + 1)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Interior values ũ_j at time t."""

    t: float
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def max_norm(self) -> float:
        return float(np.max(np.abs(self.values)))


def initial_state(problem: HeatProblem, grid: GridConfig) -> StateVector:
    return StateVector(t=0.0, values=np.asarray(problem.initial(grid.nodes), dtype=float))


# ── Problem factories ─────────────────────────────────────────────


def sine_problem(T: float = 0.1) -> HeatProblem:
    """u = e^{−π²t}·sin(πx) with zero boundary values."""
    pi2 = math.pi**2
    return HeatProblem(
        initial=lambda x: np.sin(math.pi * np.asarray(x, dtype=float)),
        bc_left=lambda t: 0.0,
        bc_right=lambda t: 0.0,
        T=T,
        exact=lambda x, t: math.exp(-pi2 * t) * np.sin(math.pi * np.asarray(x, dtype=float)),
        exact_t=lambda x, t: -pi2 * math.exp(-pi2 * t) * np.sin(math.pi * np.asarray(x, dtype=float)),
        # u_tt = π⁴e^{−π²t}sin(πx) ranges over [0, π⁴] on [0,1]×[0,T]
        utt_bounds=(0.0, math.pi**4),
        name="sine",
    )


def constant_problem(c: float, T: float = 0.1) -> HeatProblem:
    """u ≡ c with matching constant boundary values."""
    return HeatProblem(
        initial=lambda x: np.zeros_like(np.asarray(x, dtype=float)) + c,
        bc_left=lambda t: c,
        bc_right=lambda t: c,
        T=T,
        exact=lambda x, t: np.zeros_like(np.asarray(x, dtype=float)) + c,
        exact_t=lambda x, t: np.zeros_like(np.asarray(x, dtype=float)),
        utt_bounds=(0.0, 0.0),
        name="constant",
    )


def zero_problem(T: float = 0.1) -> HeatProblem:
    """u ≡ 0."""
    problem = constant_problem(0.0, T)
    return HeatProblem(
        initial=problem.initial,
        bc_left=problem.bc_left,
        bc_right=problem.bc_right,
        T=T,
        exact=problem.exact,
        exact_t=problem.exact_t,
        utt_bounds=problem.utt_bounds,
        name="zero",
    )


PROBLEMS: dict[str, Callable[[float], HeatProblem]] = {
    "sine": sine_problem,
    "zero": zero_problem,
}
