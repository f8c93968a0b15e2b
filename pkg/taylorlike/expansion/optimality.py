"""Worst-case remainder of arbitrary weights, via the Peano kernel.

For weights w on the points xₖ = a + k(b−a)/n with Σw = 1, the expansion error
is E = ∫ₐᵇ K(t) f″(t) dt with the piecewise-linear kernel

    K(t) = (b − t) − (b − a) · Σ_{xₖ > t} wₖ.

Over all f with m₂ ≤ f″ ≤ M₂ the largest |ε| = |E|/(b−a) is
[(M₂−m₂)/2 · ∫|K| + |(M₂+m₂)/2 · ∫K|] / (b−a), which for the optimal weights
equals (b−a)(M₂−m₂)/(8n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger

from taylorlike.expansion.formulas import (
    ExpansionConfig,
    ExpansionError,
    epsilon_bound_like,
    sample_points,
    weights,
)
from taylorlike.functions.registry import DerivativeBounds


@dataclass(frozen=True)
class WeightPerturbationResult:
    """Outcome of the random weight-perturbation experiment."""

    n: int
    trials: int
    optimal_bound: float
    best_perturbed_bound: float
    optimal_is_minimal: bool


def _kernel_integrals(w: np.ndarray, cfg: ExpansionConfig) -> tuple[float, float]:
    """Exact ∫|K| and ∫K over [a, b] for the weights w."""
    x = sample_points(cfg)
    length = cfg.length
    # tails[j] = Σ_{k > j} w_k, constant on the open cell (x_j, x_{j+1})
    tails = np.cumsum(w[::-1])[::-1][1:]
    left = (cfg.b - x[:-1]) - length * tails
    right = (cfg.b - x[1:]) - length * tails
    widths = np.diff(x)

    signed = float(np.sum((left + right) / 2 * widths))
    same_sign = left * right >= 0
    with np.errstate(divide="ignore", invalid="ignore"):
        crossing = (left**2 + right**2) / (2 * (np.abs(left) + np.abs(right))) * widths
    absolute = np.where(same_sign, np.abs(left + right) / 2 * widths, crossing)
    return float(np.sum(absolute)), signed


def peano_remainder_bound(
    w: np.ndarray | list[float],
    cfg: ExpansionConfig,
    bounds: DerivativeBounds,
) -> float:
    """
    Largest |ε| reachable by any f with m₂ ≤ f″ ≤ M₂ for the given weights.

    Args:
        w: n+1 weights on the equispaced points; must sum to 1.
        cfg: Expansion configuration (a, b, n).
        bounds: Second-derivative bounds.
    """
    w = np.asarray(w, dtype=float)
    if w.shape != (cfg.n + 1,):
        raise ExpansionError(f"expected {cfg.n + 1} weights, got {w.shape[0]}")
    if abs(math.fsum(w) - 1.0) > 1e-12:
        raise ExpansionError(f"weights must sum to 1, got {math.fsum(w)!r}")
    abs_integral, integral = _kernel_integrals(w, cfg)
    centre = (bounds.M2 + bounds.m2) / 2
    return (bounds.span / 2 * abs_integral + abs(centre * integral)) / cfg.length


def weight_perturbation_check(
    cfg: ExpansionConfig,
    bounds: DerivativeBounds,
    trials: int = 200,
    scale: float = 0.1,
    seed: int = 0,
) -> WeightPerturbationResult:
    """
    Compare the optimal weights against random symmetric perturbations.

    Perturbations keep Σw = 1 and wₖ = w_{n−k}; each is scaled by
    ``scale / n`` so that weights stay of the same order.
    """
    if trials < 1:
        raise ExpansionError(f"trials must be positive, got {trials}")
    rng = np.random.default_rng(seed)
    base = weights(cfg.n)
    optimal = peano_remainder_bound(base, cfg, bounds)

    best = math.inf
    for _ in range(trials):
        delta = rng.standard_normal(cfg.n + 1)
        delta = (delta + delta[::-1]) / 2
        delta -= delta.mean()
        candidate = base + scale / cfg.n * delta
        candidate[-1] = 1.0 - math.fsum(candidate[:-1])
        best = min(best, peano_remainder_bound(candidate, cfg, bounds))

    slack = 1e-12 * (1.0 + optimal)
    result = WeightPerturbationResult(
        n=cfg.n,
        trials=trials,
        optimal_bound=optimal,
        best_perturbed_bound=best,
        optimal_is_minimal=optimal <= best + slack,
    )
    logger.debug(
        f"Weight perturbation n={cfg.n}: optimal={optimal:.6e}, best perturbed={best:.6e}"
    )
    if abs(optimal - epsilon_bound_like(cfg, bounds)) > slack:
        logger.warning(
            f"Peano bound {optimal:.6e} differs from the closed form {epsilon_bound_like(cfg, bounds):.6e}"
        )
    return result
