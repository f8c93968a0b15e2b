"""First-order expansions of f(b) around a.

Two formulas are implemented:

- the classical first-order Taylor formula
  f(b) = f(a) + (b−a)f′(a) + (b−a)ε,  (b−a)m₂/2 ≤ ε ≤ (b−a)M₂/2;
- the Taylor-like formula with optimal equispaced weights
  f(b) = f(a) + (b−a)Σₖ wₖ f′(a + k(b−a)/n) + (b−a)ε,  |ε| ≤ (b−a)(M₂−m₂)/(8n),
  with w₀ = wₙ = 1/(2n) and wₖ = 1/n in between.

Both report ε per unit length; ``abs_error_bound`` carries the (b−a) factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from loguru import logger

from taylorlike.functions.registry import (
    DerivativeBounds,
    FunctionSpec,
    second_derivative_bounds,
)

# Relative slack used when checking |ε| against its bound
BOUND_SLACK = 1e-12


class ExpansionError(Exception):
    """Raised for invalid expansion parameters."""


class Method(str, Enum):
    CLASSICAL = "classical"
    TAYLOR_LIKE = "taylorlike"


@dataclass(frozen=True)
class ExpansionConfig:
    """Base point a, evaluation point b and number of subintervals n."""

    a: float
    b: float
    n: int = 1

    def __post_init__(self) -> None:
        if not self.a < self.b:
            raise ExpansionError(f"expansion needs a < b, got a={self.a}, b={self.b}")
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise ExpansionError(f"n must be positive, got {self.n}")

    @property
    def length(self) -> float:
        return self.b - self.a


@dataclass(frozen=True)
class ExpansionReport:
    """Approximation, truth, actual remainder and its theoretical bounds."""

    approx: float
    truth: float
    epsilon: float
    epsilon_bound: float
    abs_error: float
    abs_error_bound: float
    method: Method
    epsilon_lower: float
    epsilon_upper: float
    bounds: DerivativeBounds
    n: int

    @property
    def within_bound(self) -> bool:
        """|ε| ≤ bound, up to floating-point slack scaled by the bound."""
        return abs(self.epsilon) <= self.epsilon_bound + BOUND_SLACK * (1.0 + abs(self.epsilon_bound))


# ── Weights and approximations ────────────────────────────────────


def weights(n: int) -> np.ndarray:
    """Optimal weights: 1/(2n) at both endpoints, 1/n at the n−1 interior points."""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ExpansionError(f"n must be positive, got {n}")
    w = np.full(n + 1, 1.0 / n)
    w[0] = w[-1] = 1.0 / (2 * n)
    assert abs(math.fsum(w) - 1.0) <= 1e-15, "weights must sum to 1"
    return w


def sample_points(cfg: ExpansionConfig) -> np.ndarray:
    """Equispaced points a + (k·(b−a))/n, the last one clamped to exactly b."""
    k = np.arange(cfg.n + 1, dtype=float)
    points = cfg.a + (k * (cfg.b - cfg.a)) / cfg.n
    points[-1] = cfg.b
    return points


def taylor_like_approx(spec: FunctionSpec, cfg: ExpansionConfig) -> float:
    """f(a) + (b−a)·Σₖ wₖ f′(a + k(b−a)/n)."""
    spec.require_interval(cfg.a, cfg.b)
    slopes = np.asarray(spec.f_prime(sample_points(cfg)), dtype=float)
    weighted = math.fsum(weights(cfg.n) * slopes)
    return float(spec.f(cfg.a)) + cfg.length * weighted


def taylor_classical_approx(spec: FunctionSpec, cfg: ExpansionConfig) -> float:
    """f(a) + (b−a)·f′(a)."""
    spec.require_interval(cfg.a, cfg.b)
    return float(spec.f(cfg.a)) + cfg.length * float(spec.f_prime(cfg.a))


# ── Remainder bounds ──────────────────────────────────────────────


def epsilon_bound_like(cfg: ExpansionConfig, bounds: DerivativeBounds) -> float:
    """(b−a)·(M₂−m₂)/(8n)."""
    return cfg.length * bounds.span / (8 * cfg.n)


def epsilon_bound_classical(cfg: ExpansionConfig, bounds: DerivativeBounds) -> float:
    """(b−a)/2 · max(|m₂|, |M₂|), the magnitude of the two-sided classical bound."""
    return cfg.length / 2 * bounds.sup_abs


def epsilon_interval_like(cfg: ExpansionConfig, bounds: DerivativeBounds) -> tuple[float, float]:
    """Signed interval [−(b−a)Λ/(8n), (b−a)Λ/(8n)] containing ε."""
    bound = epsilon_bound_like(cfg, bounds)
    return -bound, bound


def epsilon_interval_classical(
    cfg: ExpansionConfig, bounds: DerivativeBounds
) -> tuple[float, float]:
    """Signed interval [(b−a)m₂/2, (b−a)M₂/2] containing the classical ε."""
    return cfg.length / 2 * bounds.m2, cfg.length / 2 * bounds.M2


def evaluate(
    spec: FunctionSpec,
    cfg: ExpansionConfig,
    method: Method | str = Method.TAYLOR_LIKE,
    bounds: DerivativeBounds | None = None,
) -> ExpansionReport:
    """
    Evaluate one expansion and compare its remainder with the theoretical bound.

    Args:
        spec: Function to expand.
        cfg: Expansion configuration (a, b, n).
        method: Classical or Taylor-like.
        bounds: Second-derivative bounds on [a, b]; computed from the registry if omitted.

    Returns:
        ExpansionReport with ε = (truth − approx)/(b−a).
    """
    method = Method(method)
    spec.require_interval(cfg.a, cfg.b)
    if bounds is None:
        bounds = second_derivative_bounds(spec, cfg.a, cfg.b)

    truth = float(spec.f(cfg.b))
    if method is Method.TAYLOR_LIKE:
        approx = taylor_like_approx(spec, cfg)
        bound = epsilon_bound_like(cfg, bounds)
        lower, upper = epsilon_interval_like(cfg, bounds)
    else:
        approx = taylor_classical_approx(spec, cfg)
        bound = epsilon_bound_classical(cfg, bounds)
        lower, upper = epsilon_interval_classical(cfg, bounds)

    epsilon = (truth - approx) / cfg.length
    report = ExpansionReport(
        approx=approx,
        truth=truth,
        epsilon=epsilon,
        epsilon_bound=bound,
        abs_error=abs(truth - approx),
        abs_error_bound=cfg.length * bound,
        method=method,
        epsilon_lower=lower,
        epsilon_upper=upper,
        bounds=bounds,
        n=cfg.n,
    )
    if bounds.exact and not report.within_bound:
        logger.warning(
            f"Remainder exceeds its bound for {spec.id!r} on [{cfg.a}, {cfg.b}], "
            f"n={cfg.n}: |eps|={abs(epsilon):.3e} > {bound:.3e}"
        )
    return report
