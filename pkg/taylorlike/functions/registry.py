"""Registry of analytic test functions with exact derivatives.

Every function is hard-coded with closed-form f, f′ and f″ (vectorised over
numpy arrays). When the zeros of f‴ are known in closed form the registry
records them, so the extrema m₂, M₂ of f″ on any interval are exact: they are
attained at the endpoints or at one of those critical points. Functions
without that metadata fall back to a dense uniform scan and are flagged
``exact=False``.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from loguru import logger

RealFunction = Callable[[np.ndarray | float], np.ndarray | float]
CriticalPoints = Callable[[float, float], Sequence[float]]

DEFAULT_SCAN_POINTS = 10_001


class RegistryError(Exception):
    """Raised when a function lookup or a derivative-bound request fails."""


class UnknownFunctionError(RegistryError):
    """Raised for an id that is not registered."""


class DegenerateIntervalError(RegistryError):
    """Raised when an interval [a, b] has a >= b."""


class DomainViolationError(RegistryError):
    """Raised when an interval leaves the function's domain of validity."""


# ── Data types ────────────────────────────────────────────────────


@dataclass(frozen=True)
class DerivativeBounds:
    """Infimum and supremum of f″ on an interval."""

    m2: float
    M2: float
    exact: bool = True

    def __post_init__(self) -> None:
        if self.m2 > self.M2:
            raise RegistryError(f"invalid derivative bounds: m2={self.m2} > M2={self.M2}")

    @property
    def span(self) -> float:
        """Λ = M₂ − m₂."""
        return self.M2 - self.m2

    @property
    def sup_abs(self) -> float:
        """max(|m₂|, |M₂|), i.e. ‖f″‖∞ on the interval."""
        return max(abs(self.m2), abs(self.M2))

    def widened(self, fraction: float) -> DerivativeBounds:
        """Pad sampled bounds by fraction·max(|m₂|,|M₂|); exact bounds are returned as-is."""
        if self.exact or fraction <= 0:
            return self
        pad = fraction * self.sup_abs
        return DerivativeBounds(m2=self.m2 - pad, M2=self.M2 + pad, exact=False)


@dataclass(frozen=True)
class FunctionSpec:
    """A test function bundled with its exact first and second derivatives."""

    id: str
    f: RealFunction
    f_prime: RealFunction
    f_second: RealFunction
    domain: tuple[float, float] = (-10.0, 10.0)
    description: str = ""
    aliases: tuple[str, ...] = ()
    # Zeros of f‴ inside [a, b]; None when unknown (bounds are then sampled)
    critical_points: Optional[CriticalPoints] = field(default=None, compare=False)

    @property
    def has_exact_bounds(self) -> bool:
        return self.critical_points is not None

    def require_interval(self, a: float, b: float) -> None:
        """Check that a < b and [a, b] lies inside the domain."""
        if not a < b:
            raise DegenerateIntervalError(f"degenerate interval: [{a}, {b}] (need a < b)")
        lo, hi = self.domain
        if a < lo or b > hi:
            raise DomainViolationError(
                f"domain violation: [{a}, {b}] is outside the domain [{lo}, {hi}] of {self.id!r}"
            )


def _no_critical_points(a: float, b: float) -> list[float]:
    return []


def _periodic_points(offset: float, period: float) -> CriticalPoints:
    """Critical points offset + j·period lying strictly inside (a, b)."""

    def points(a: float, b: float) -> list[float]:
        first = math.ceil((a - offset) / period)
        last = math.floor((b - offset) / period)
        return [offset + j * period for j in range(first, last + 1) if a < offset + j * period < b]

    return points


def _fixed_points(*xs: float) -> CriticalPoints:
    def points(a: float, b: float) -> list[float]:
        return [x for x in xs if a < x < b]

    return points


def _constant(value: float) -> RealFunction:
    def fn(x):
        return np.zeros_like(np.asarray(x, dtype=float)) + value

    return fn


# ── Registry ──────────────────────────────────────────────────────


class FunctionRegistry:
    """
    Registry of test functions.

    Lookup is by id or alias (case-insensitive for aliases). Specs are
    immutable, so lookups are pure and safe to share across threads.
    """

    def __init__(self) -> None:
        self._by_id: dict[str, FunctionSpec] = {}
        self._by_alias: dict[str, FunctionSpec] = {}

    def register(self, spec: FunctionSpec) -> None:
        """Register a function (overwrites an existing one with the same id)."""
        self._by_id[spec.id] = spec
        for alias in spec.aliases:
            self._by_alias[alias.lower()] = spec

    def get(self, id_or_alias: str) -> Optional[FunctionSpec]:
        """Lookup by id or alias; None when missing."""
        return self._by_id.get(id_or_alias) or self._by_alias.get(id_or_alias.lower())

    def lookup(self, id_or_alias: str) -> FunctionSpec:
        """Lookup by id or alias, raising UnknownFunctionError when missing."""
        spec = self.get(id_or_alias)
        if spec is None:
            raise UnknownFunctionError(
                f"unknown function: {id_or_alias!r} (valid ids: {', '.join(self.ids())})"
            )
        return spec

    def ids(self) -> list[str]:
        return sorted(self._by_id)

    def all(self) -> list[FunctionSpec]:
        return [self._by_id[i] for i in self.ids()]

    def count(self) -> int:
        return len(self._by_id)

    def __contains__(self, id_or_alias: str) -> bool:
        return self.get(id_or_alias) is not None


FUNCTIONS = FunctionRegistry()

for _spec in (
    FunctionSpec(
        id="affine",
        f=lambda x: 2.0 * np.asarray(x, dtype=float) + 1.0,
        f_prime=_constant(2.0),
        f_second=_constant(0.0),
        description="2x + 1",
        critical_points=_no_critical_points,
    ),
    FunctionSpec(
        id="parabola",
        f=lambda x: np.asarray(x, dtype=float) ** 2,
        f_prime=lambda x: 2.0 * np.asarray(x, dtype=float),
        f_second=_constant(2.0),
        description="x^2",
        critical_points=_no_critical_points,
    ),
    FunctionSpec(
        id="bump",
        f=lambda x: np.asarray(x, dtype=float) * (1.0 - np.asarray(x, dtype=float)),
        f_prime=lambda x: 1.0 - 2.0 * np.asarray(x, dtype=float),
        f_second=_constant(-2.0),
        description="x(1 - x)",
        critical_points=_no_critical_points,
    ),
    FunctionSpec(
        id="poly3",
        f=lambda x: np.asarray(x, dtype=float) ** 3,
        f_prime=lambda x: 3.0 * np.asarray(x, dtype=float) ** 2,
        f_second=lambda x: 6.0 * np.asarray(x, dtype=float),
        description="x^3",
        aliases=("cubic",),
        critical_points=_no_critical_points,
    ),
    FunctionSpec(
        id="quartic",
        f=lambda x: np.asarray(x, dtype=float) ** 4,
        f_prime=lambda x: 4.0 * np.asarray(x, dtype=float) ** 3,
        f_second=lambda x: 12.0 * np.asarray(x, dtype=float) ** 2,
        description="x^4",
        critical_points=_fixed_points(0.0),
    ),
    FunctionSpec(
        id="sine",
        f=np.sin,
        f_prime=np.cos,
        f_second=lambda x: -np.sin(x),
        description="sin(x)",
        aliases=("sin",),
        critical_points=_periodic_points(math.pi / 2, math.pi),
    ),
    FunctionSpec(
        id="cosine",
        f=np.cos,
        f_prime=lambda x: -np.sin(x),
        f_second=lambda x: -np.cos(x),
        description="cos(x)",
        aliases=("cos",),
        critical_points=_periodic_points(0.0, math.pi),
    ),
    FunctionSpec(
        id="exp",
        f=np.exp,
        f_prime=np.exp,
        f_second=np.exp,
        description="exp(x)",
        critical_points=_no_critical_points,
    ),
    FunctionSpec(
        id="runge",
        f=lambda x: 1.0 / (1.0 + 25.0 * np.asarray(x, dtype=float) ** 2),
        f_prime=lambda x: -50.0 * np.asarray(x, dtype=float)
        / (1.0 + 25.0 * np.asarray(x, dtype=float) ** 2) ** 2,
        f_second=lambda x: 50.0 * (75.0 * np.asarray(x, dtype=float) ** 2 - 1.0)
        / (1.0 + 25.0 * np.asarray(x, dtype=float) ** 2) ** 3,
        domain=(-5.0, 5.0),
        description="1 / (1 + 25x^2)",
    ),
):
    FUNCTIONS.register(_spec)


def lookup(id: str) -> FunctionSpec:
    """Return the registered spec for an id or alias."""
    return FUNCTIONS.lookup(id)


def second_derivative_bounds(
    spec: FunctionSpec,
    a: float,
    b: float,
    scan_points: int = DEFAULT_SCAN_POINTS,
) -> DerivativeBounds:
    """
    Bounds m₂ ≤ f″ ≤ M₂ on [a, b].

    Exact when the FunctionSpec knows the critical points of f″ (extrema are then
    taken over the endpoints and those points); otherwise sampled on a
    uniform grid of ``scan_points`` points and flagged ``exact=False``.
    """
    spec.require_interval(a, b)

    if spec.critical_points is not None:
        candidates = np.array([a, b, *spec.critical_points(a, b)], dtype=float)
        values = np.asarray(spec.f_second(candidates), dtype=float)
        return DerivativeBounds(m2=float(values.min()), M2=float(values.max()), exact=True)

    if scan_points < 2:
        raise RegistryError(f"scan_points must be at least 2, got {scan_points}")
    grid = np.linspace(a, b, scan_points)
    values = np.asarray(spec.f_second(grid), dtype=float)
    logger.debug(f"Sampled f'' bounds for {spec.id!r} on [{a}, {b}] with {scan_points} points")
    return DerivativeBounds(m2=float(values.min()), M2=float(values.max()), exact=False)
