"""P1 interpolation and exact W^{1,1} error measurement."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from taylorlike.functions.registry import FunctionSpec
from taylorlike.interpolation.mesh import Mesh, MeshError

DEFAULT_QUAD_POINTS = 32
DEFAULT_SIGN_SAMPLES = 64


@dataclass(frozen=True, eq=False)
class P1Interpolant:
    """Continuous piecewise-affine function through (xᵢ, values[i])."""

    mesh: Mesh
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.shape != self.mesh.nodes.shape:
            raise MeshError(
                f"expected {self.mesh.nodes.size} nodal values, got {values.size}"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def slopes(self) -> np.ndarray:
        """Constant derivative u_I′ on each cell."""
        return np.diff(self.values) / self.mesh.widths

    def cell_index(self, x: np.ndarray | float) -> np.ndarray:
        idx = np.searchsorted(self.mesh.nodes, x, side="right") - 1
        return np.clip(idx, 0, self.mesh.cells - 1)

    def __call__(self, x: np.ndarray | float) -> np.ndarray | float:
        return np.interp(x, self.mesh.nodes, self.values)

    def derivative(self, x: np.ndarray | float) -> np.ndarray | float:
        """u_I′(x); at an interior node the slope of the cell to its right."""
        return self.slopes[self.cell_index(x)]


@dataclass(frozen=True)
class ErrorNorms:
    """Measured L¹ errors of u − u_I and u′ − u_I′."""

    l1_value_error: float
    l1_deriv_error: float

    @property
    def w11_error(self) -> float:
        return self.l1_value_error + self.l1_deriv_error


def interpolate(spec: FunctionSpec, mesh: Mesh) -> P1Interpolant:
    """P1 interpolant with values[i] = f(xᵢ)."""
    spec.require_interval(0.0, 1.0)
    return P1Interpolant(mesh=mesh, values=np.asarray(spec.f(mesh.nodes), dtype=float))


def _sign_breaks(g: Callable, lo: float, hi: float, samples: int) -> list[float]:
    """Points in [lo, hi] where g changes sign, bracketed on a uniform sub-grid."""
    grid = np.linspace(lo, hi, samples + 1)
    values = np.asarray(g(grid), dtype=float)
    breaks = [lo, hi]
    breaks.extend(grid[1:-1][values[1:-1] == 0.0].tolist())
    for j in np.nonzero(values[:-1] * values[1:] < 0)[0]:
        root = brentq(lambda t: float(g(t)), grid[j], grid[j + 1], xtol=1e-15)
        breaks.append(root)
    return sorted(set(breaks))


def _abs_integral(
    g: Callable,
    lo: float,
    hi: float,
    rule: tuple[np.ndarray, np.ndarray],
    samples: int,
) -> float:
    """∫|g| over [lo, hi] by Gauss–Legendre on each sign-definite piece."""
    nodes, quad_weights = rule
    pieces = []
    breaks = _sign_breaks(g, lo, hi, samples)
    for left, right in zip(breaks[:-1], breaks[1:]):
        if right <= left:
            continue
        half = (right - left) / 2
        x = (left + right) / 2 + half * nodes
        pieces.append(half * float(np.dot(quad_weights, np.abs(g(x)))))
    return math.fsum(pieces)


def w11_error(
    spec: FunctionSpec,
    interp: P1Interpolant,
    quad_points: int = DEFAULT_QUAD_POINTS,
    sign_samples: int = DEFAULT_SIGN_SAMPLES,
) -> ErrorNorms:
    """
    ‖u − u_I‖₀,₁ and ‖u′ − u_I′‖₀,₁ by per-cell composite Gauss–Legendre quadrature.

    Each cell is further split where the integrand changes sign, since |·| has a
    kink there (u′ − u_I′ always vanishes somewhere inside a cell).
    """
    if quad_points < 2:
        raise MeshError(f"quad_points must be at least 2, got {quad_points}")
    spec.require_interval(0.0, 1.0)
    rule = np.polynomial.legendre.leggauss(quad_points)
    nodes, values, slopes = interp.mesh.nodes, interp.values, interp.slopes

    value_parts, deriv_parts = [], []
    for i in range(interp.mesh.cells):
        x0, v0, slope = float(nodes[i]), float(values[i]), float(slopes[i])
        x1 = float(nodes[i + 1])

        def value_error(x, x0=x0, v0=v0, slope=slope):
            return spec.f(x) - (v0 + slope * (np.asarray(x) - x0))

        def deriv_error(x, slope=slope):
            return spec.f_prime(x) - slope

        value_parts.append(_abs_integral(value_error, x0, x1, rule, sign_samples))
        deriv_parts.append(_abs_integral(deriv_error, x0, x1, rule, sign_samples))

    return ErrorNorms(l1_value_error=math.fsum(value_parts), l1_deriv_error=math.fsum(deriv_parts))
