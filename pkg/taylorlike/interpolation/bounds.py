"""W^{1,1} interpolation error bounds on ]0, 1[.

With h = max hᵢ, S = ‖u″‖∞ and Λ = M₂ − m₂ on [0, 1]:

    classical      ‖u − u_I‖₁,₁ ≤ (h + h²)·S
    Taylor-like    ‖u − u_I‖₁,₁ ≤ (h + h²)/2·S + (h + h²)/(8n)·Λ    (n ≥ 1)
    asymptotic     ‖u − u_I‖₁,₁ ≤ (h + h²)/2·S                      (n → ∞)

Each bound is the sum of a derivative part (the h terms) and a value part
(the h² terms).
"""

from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from taylorlike.functions.registry import (
    DerivativeBounds,
    FunctionSpec,
    second_derivative_bounds,
)
from taylorlike.interpolation.mesh import Mesh, MeshError
from taylorlike.interpolation.norms import (
    DEFAULT_QUAD_POINTS,
    DEFAULT_SIGN_SAMPLES,
    interpolate,
    w11_error,
)

DEFAULT_SLACK = 1e-10


def _check(h: float, sup_u2: float) -> None:
    if h <= 0:
        raise MeshError(f"h must be positive, got {h}")
    if sup_u2 < 0:
        raise MeshError(f"sup |u''| must be nonnegative, got {sup_u2}")


def _check_n(n: int) -> None:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise MeshError(f"n must be positive, got {n}")


# ── Classical estimate ────────────────────────────────────────────


def classical_deriv_bound(h: float, sup_u2: float) -> float:
    """‖u′ − u_I′‖₀,₁ ≤ h·S."""
    _check(h, sup_u2)
    return h * sup_u2


def classical_value_bound(h: float, sup_u2: float) -> float:
    """‖u − u_I‖₀,₁ ≤ h²·S."""
    _check(h, sup_u2)
    return h**2 * sup_u2


def classical_bound(h: float, sup_u2: float) -> float:
    """(h + h²)·‖u″‖∞."""
    _check(h, sup_u2)
    return (h + h**2) * sup_u2


def classical_bound_sharp(mesh: Mesh, sup_u2: float) -> float:
    """(Σhᵢ² + Σhᵢ³)·S, the mesh sums before they are bounded by h and h²."""
    _check(mesh.h, sup_u2)
    return (mesh.width_power_sum(2) + mesh.width_power_sum(3)) * sup_u2


# ── Taylor-like estimate ──────────────────────────────────────────


def taylor_like_deriv_bound(h: float, n: int, sup_u2: float, bounds: DerivativeBounds) -> float:
    """‖u′ − u_I′‖₀,₁ ≤ h/2·S + h/(8n)·Λ."""
    _check(h, sup_u2)
    _check_n(n)
    return h / 2 * sup_u2 + h / (8 * n) * bounds.span


def taylor_like_value_bound(h: float, n: int, sup_u2: float, bounds: DerivativeBounds) -> float:
    """‖u − u_I‖₀,₁ ≤ h²/2·S + h²/(8n)·Λ."""
    _check(h, sup_u2)
    _check_n(n)
    return h**2 / 2 * sup_u2 + h**2 / (8 * n) * bounds.span


def taylor_like_bound(h: float, n: int, sup_u2: float, bounds: DerivativeBounds) -> float:
    """(h + h²)/2·S + (h + h²)/(8n)·(M₂ − m₂)."""
    _check(h, sup_u2)
    _check_n(n)
    return (h + h**2) / 2 * sup_u2 + (h + h**2) / (8 * n) * bounds.span


def asymptotic_bound(h: float, sup_u2: float) -> float:
    """(h + h²)/2·S, the n → ∞ limit of the Taylor-like bound."""
    _check(h, sup_u2)
    return (h + h**2) / 2 * sup_u2


# ── Verification ──────────────────────────────────────────────────


@dataclass(frozen=True)
class NormReport:
    """Measured W^{1,1} interpolation error next to its bounds."""

    l1_value_error: float
    l1_deriv_error: float
    w11_error: float
    classical_bound: float
    taylor_like_bound: float
    asymptotic_bound: float
    n: int
    sup_u2: float
    h: float
    bounds: DerivativeBounds
    classical_deriv_bound: float
    classical_value_bound: float
    classical_bound_sharp: float
    taylor_like_deriv_bound: float
    taylor_like_value_bound: float
    pass_classical: bool
    pass_taylor_like: bool
    pass_ordering: bool
    pass_asymptotic_ordering: bool
    pass_components: bool

    @property
    def passed(self) -> bool:
        return (
            self.pass_classical
            and self.pass_taylor_like
            and self.pass_ordering
            and self.pass_asymptotic_ordering
            and self.pass_components
        )


def verify(
    spec: FunctionSpec,
    mesh: Mesh,
    n: int = 1,
    quad_points: int = DEFAULT_QUAD_POINTS,
    bounds: DerivativeBounds | None = None,
    slack: float = DEFAULT_SLACK,
    sign_samples: int = DEFAULT_SIGN_SAMPLES,
) -> NormReport:
    """
    Measure the P1 interpolation error of spec on mesh and check it against
    the classical and Taylor-like estimates.

    Args:
        spec: Function to interpolate on [0, 1].
        mesh: Mesh of the unit interval.
        n: Number of subintervals in the Taylor-like estimate.
        quad_points: Gauss–Legendre nodes per integration piece.
        bounds: f″ bounds on [0, 1]; taken from the registry if omitted.
        slack: Absolute slack of every pass flag.
    """
    _check_n(n)
    if bounds is None:
        bounds = second_derivative_bounds(spec, 0.0, 1.0)
    interp = interpolate(spec, mesh)
    errors = w11_error(spec, interp, quad_points=quad_points, sign_samples=sign_samples)

    h, sup_u2 = mesh.h, bounds.sup_abs
    classical = classical_bound(h, sup_u2)
    like = taylor_like_bound(h, n, sup_u2, bounds)
    asymptotic = asymptotic_bound(h, sup_u2)
    like_deriv = taylor_like_deriv_bound(h, n, sup_u2, bounds)
    like_value = taylor_like_value_bound(h, n, sup_u2, bounds)
    w11 = errors.l1_value_error + errors.l1_deriv_error

    report = NormReport(
        l1_value_error=errors.l1_value_error,
        l1_deriv_error=errors.l1_deriv_error,
        w11_error=w11,
        classical_bound=classical,
        taylor_like_bound=like,
        asymptotic_bound=asymptotic,
        n=n,
        sup_u2=sup_u2,
        h=h,
        bounds=bounds,
        classical_deriv_bound=classical_deriv_bound(h, sup_u2),
        classical_value_bound=classical_value_bound(h, sup_u2),
        classical_bound_sharp=classical_bound_sharp(mesh, sup_u2),
        taylor_like_deriv_bound=like_deriv,
        taylor_like_value_bound=like_value,
        pass_classical=w11 <= classical + slack,
        pass_taylor_like=w11 <= like + slack,
        pass_ordering=like <= classical + slack,
        pass_asymptotic_ordering=asymptotic <= like + slack,
        pass_components=(
            errors.l1_deriv_error <= like_deriv + slack
            and errors.l1_value_error <= like_value + slack
        ),
    )
    if not report.passed:
        level = "WARNING" if bounds.exact else "INFO"
        logger.log(level, f"Interpolation bound check failed for {spec.id!r} (h={h:.4g}, n={n})")
    return report
