"""Analytic test functions with exact derivatives and second-derivative bounds."""

from taylorlike.functions.registry import (
    FUNCTIONS,
    DegenerateIntervalError,
    DerivativeBounds,
    DomainViolationError,
    FunctionRegistry,
    FunctionSpec,
    RegistryError,
    UnknownFunctionError,
    lookup,
    second_derivative_bounds,
)

__all__ = [
    "FUNCTIONS",
    "DegenerateIntervalError",
    "DerivativeBounds",
    "DomainViolationError",
    "FunctionRegistry",
    "FunctionSpec",
    "RegistryError",
    "UnknownFunctionError",
    "lookup",
    "second_derivative_bounds",
]
