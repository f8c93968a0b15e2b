"""Tridiagonal systems and the Thomas algorithm."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from taylorlike.heat.problem import HeatError, SingularSystemError

PIVOT_TOL = 1e-14


@dataclass(frozen=True, eq=False)
class TridiagonalSystem:
    """
    A x = rhs with A tridiagonal:

        sub[i-1]·x[i-1] + diag[i]·x[i] + sup[i]·x[i+1] = rhs[i]
    """

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray

    def __post_init__(self) -> None:
        for name in ("sub", "diag", "sup", "rhs"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        size = self.diag.size
        if size < 1 or self.rhs.size != size:
            raise HeatError(f"diag and rhs must have the same positive length, got {size} and {self.rhs.size}")
        if self.sub.size != size - 1 or self.sup.size != size - 1:
            raise HeatError(
                f"sub and sup must have length {size - 1}, got {self.sub.size} and {self.sup.size}"
            )

    @property
    def size(self) -> int:
        return int(self.diag.size)

    def is_diagonally_dominant(self) -> bool:
        """|diag[i]| ≥ |sub[i−1]| + |sup[i]| on every row."""
        off = np.zeros(self.size)
        off[1:] += np.abs(self.sub)
        off[:-1] += np.abs(self.sup)
        return bool(np.all(np.abs(self.diag) >= off))

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.sub, -1) + np.diag(self.sup, 1)

    def residual(self, x: np.ndarray) -> float:
        """‖A x − rhs‖∞."""
        return float(np.max(np.abs(self.to_dense() @ np.asarray(x) - self.rhs)))


def thomas_solve(system: TridiagonalSystem, pivot_tol: float = PIVOT_TOL) -> np.ndarray:
    """
    Solve a diagonally dominant tridiagonal system in O(J) operations.

    Raises:
        SingularSystemError: If the system is not diagonally dominant or a pivot
            falls below ``pivot_tol`` in magnitude.
    """
    if not system.is_diagonally_dominant():
        raise SingularSystemError("near-singular system: matrix is not diagonally dominant")

    a, b = system.sub.tolist(), system.diag.tolist()
    c, d = system.sup.tolist(), system.rhs.tolist()
    size = len(b)
    c_prime = [0.0] * size
    d_prime = [0.0] * size

    pivot = b[0]
    if abs(pivot) < pivot_tol:
        raise SingularSystemError(f"near-singular system: pivot {pivot:.3e} at row 0")
    if size > 1:
        c_prime[0] = c[0] / pivot
    d_prime[0] = d[0] / pivot

    for i in range(1, size):
        pivot = b[i] - a[i - 1] * c_prime[i - 1]
        if abs(pivot) < pivot_tol:
            raise SingularSystemError(f"near-singular system: pivot {pivot:.3e} at row {i}")
        if i < size - 1:
            c_prime[i] = c[i] / pivot
        d_prime[i] = (d[i] - a[i - 1] * d_prime[i - 1]) / pivot

    x = [0.0] * size
    x[-1] = d_prime[-1]
    for i in range(size - 2, -1, -1):
        x[i] = d_prime[i] - c_prime[i] * x[i + 1]
    return np.array(x)
