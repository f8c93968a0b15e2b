"""Tests for the Thomas tridiagonal solver."""

import numpy as np
import pytest

from taylorlike.heat import (
    GridConfig,
    HeatError,
    SingularSystemError,
    StateVector,
    TridiagonalSystem,
    assemble_fd2,
    sine_problem,
    thomas_solve,
)


def test_identity_returns_rhs():
    rhs = np.array([1.5, -2.0, 3.25, 0.0])
    system = TridiagonalSystem(sub=np.zeros(3), diag=np.ones(4), sup=np.zeros(3), rhs=rhs)
    assert np.array_equal(thomas_solve(system), rhs)


def test_three_by_three_hand_solution():
    # [[4, 1, 0], [1, 4, 1], [0, 1, 4]] x = [5, 6, 5]  ->  x = [1, 1, 1]
    system = TridiagonalSystem(sub=[1.0, 1.0], diag=[4.0, 4.0, 4.0], sup=[1.0, 1.0], rhs=[5.0, 6.0, 5.0])
    x = thomas_solve(system)
    assert x == pytest.approx([1.0, 1.0, 1.0], abs=1e-15)
    assert np.allclose(x, np.linalg.solve(system.to_dense(), system.rhs), atol=1e-15)


def test_fd2_matrix_matches_dense_solve():
    grid = GridConfig.from_lambda(4, 1.0)
    state = StateVector(t=0.0, values=np.zeros(4))
    lhs = assemble_fd2(state, grid, sine_problem())
    system = TridiagonalSystem(sub=lhs.sub, diag=lhs.diag, sup=lhs.sup, rhs=[0.0, 1.0, 0.0, 0.0])
    expected = np.linalg.solve(system.to_dense(), system.rhs)
    assert np.allclose(thomas_solve(system), expected, atol=1e-14, rtol=0)


def test_residual_is_small_relative_to_rhs():
    rng = np.random.default_rng(7)
    size = 50
    off = rng.uniform(-1, 1, size - 1)
    diag = 2.5 + rng.uniform(0, 1, size)
    rhs = rng.standard_normal(size)
    system = TridiagonalSystem(sub=off, diag=diag, sup=off[::-1].copy(), rhs=rhs)
    x = thomas_solve(system)
    assert system.residual(x) <= 1e-12 * np.max(np.abs(rhs))


def test_single_unknown():
    system = TridiagonalSystem(sub=[], diag=[4.0], sup=[], rhs=[2.0])
    assert thomas_solve(system).tolist() == [0.5]


def test_not_dominant_is_rejected():
    system = TridiagonalSystem(sub=[3.0], diag=[1.0, 1.0], sup=[3.0], rhs=[1.0, 1.0])
    assert not system.is_diagonally_dominant()
    with pytest.raises(SingularSystemError, match="near-singular system"):
        thomas_solve(system)


def test_tiny_pivot_is_rejected():
    system = TridiagonalSystem(sub=[0.0], diag=[1e-20, 1e-20], sup=[0.0], rhs=[1.0, 1.0])
    with pytest.raises(SingularSystemError, match="near-singular system"):
        thomas_solve(system)


def test_length_mismatch():
    with pytest.raises(HeatError):
        TridiagonalSystem(sub=[1.0, 1.0], diag=[4.0, 4.0], sup=[1.0], rhs=[1.0, 1.0])
