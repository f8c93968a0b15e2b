"""Tests for the FD1/FD2 steps, amplification factors and time-derivative bounds."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taylorlike.heat import (
    GridConfig,
    HeatError,
    HeatProblem,
    SchemeKind,
    StateVector,
    amplification_factor,
    constant_problem,
    initial_state,
    max_amplification,
    sine_problem,
    step_fd1,
    step_fd2,
    time_derivative_bound_comparison,
    time_derivative_residuals,
    zero_problem,
)

LAMBDAS = [0.1, 0.5, 1.0, 2.0, 10.0, 100.0]


def _shift_matrix(J):
    return np.eye(J, k=1) + np.eye(J, k=-1)


def _dense_fd1(values, lam, left, right):
    """Backward Euler by dense solve; left/right are boundary values at t + k."""
    J = values.size
    matrix = (1 + 2 * lam) * np.eye(J) - lam * _shift_matrix(J)
    rhs = values.copy()
    rhs[0] += lam * left
    rhs[-1] += lam * right
    return np.linalg.solve(matrix, rhs)


def _dense_fd2(values, lam, left_now, right_now, left_next, right_next):
    J = values.size
    matrix = (1 + lam) * np.eye(J) - lam / 2 * _shift_matrix(J)
    rhs = (1 - lam) * values + lam / 2 * (_shift_matrix(J) @ values)
    rhs[0] += lam / 2 * (left_now + left_next)
    rhs[-1] += lam / 2 * (right_now + right_next)
    return np.linalg.solve(matrix, rhs)


def lam_of(grid):
    return grid.k / grid.h**2


def _moving_boundary_problem():
    """Compatible data with time-dependent boundary values."""
    return HeatProblem(
        initial=lambda x: np.sin(np.pi * np.asarray(x)) + np.asarray(x),
        bc_left=lambda t: math.sin(3 * t),
        bc_right=lambda t: 1.0 + t,
        T=0.1,
        name="moving",
    )


# ── Trivial fixed points ──────────────────────────────────────────


@pytest.mark.parametrize("step", [step_fd1, step_fd2])
def test_zero_stays_zero(step):
    problem = zero_problem()
    grid = GridConfig.from_lambda(9, 1.0)
    state = step(initial_state(problem, grid), grid, problem)
    assert np.all(state.values == 0.0)
    assert state.t == grid.k


@pytest.mark.parametrize("step", [step_fd1, step_fd2])
@pytest.mark.parametrize("lam", [0.5, 1.0, 10.0])
def test_constants_are_conserved(step, lam):
    problem = constant_problem(3.7)
    grid = GridConfig.from_lambda(12, lam)
    state = initial_state(problem, grid)
    for _ in range(5):
        state = step(state, grid, problem)
        assert np.max(np.abs(state.values - 3.7)) <= 1e-13


def test_fd1_damps_sine():
    problem = sine_problem()
    grid = GridConfig.from_lambda(7, 1.0)
    before = initial_state(problem, grid)
    after = step_fd1(before, grid, problem)
    assert np.all(np.abs(after.values) < np.abs(before.values))
    assert after.max_norm < before.max_norm
    expected = _dense_fd1(before.values.copy(), 1.0, 0.0, 0.0)
    assert np.allclose(after.values, expected, atol=1e-12, rtol=0)


def test_fd2_matches_dense_sine_j7():
    problem = sine_problem()
    grid = GridConfig.from_lambda(7, 1.0)
    state = initial_state(problem, grid)
    expected = _dense_fd2(state.values.copy(), 1.0, 0.0, 0.0, 0.0, 0.0)
    assert np.allclose(step_fd2(state, grid, problem).values, expected, atol=1e-12, rtol=0)


@pytest.mark.parametrize("J", [4, 8, 16])
@pytest.mark.parametrize("lam", [0.5, 1.0, 10.0])
def test_steps_match_dense_oracle(J, lam):
    problem = _moving_boundary_problem()
    grid = GridConfig.from_lambda(J, lam)
    state = initial_state(problem, grid)
    for _ in range(3):
        t, t_next = state.t, state.t + grid.k
        fd1 = step_fd1(state, grid, problem)
        fd2 = step_fd2(state, grid, problem)
        expected1 = _dense_fd1(state.values.copy(), lam_of(grid), problem.bc_left(t_next), problem.bc_right(t_next))
        expected2 = _dense_fd2(
            state.values.copy(),
            lam_of(grid),
            problem.bc_left(t),
            problem.bc_right(t),
            problem.bc_left(t_next),
            problem.bc_right(t_next),
        )
        assert np.max(np.abs(fd1.values - expected1)) <= 1e-12
        assert np.max(np.abs(fd2.values - expected2)) <= 1e-12
        state = fd2


@pytest.mark.parametrize("step", [step_fd1, step_fd2])
def test_sine_stays_symmetric(step):
    problem = sine_problem()
    grid = GridConfig.from_lambda(15, 2.0)
    state = initial_state(problem, grid)
    for _ in range(20):
        state = step(state, grid, problem)
        assert np.max(np.abs(state.values - state.values[::-1])) <= 1e-12


def test_state_length_must_match_grid():
    problem = sine_problem()
    with pytest.raises(HeatError):
        step_fd2(StateVector(t=0.0, values=np.zeros(3)), GridConfig(J=4, k=0.01), problem)


def test_incompatible_data_rejected():
    with pytest.raises(HeatError, match="incompatible"):
        HeatProblem(initial=lambda x: np.ones_like(np.asarray(x, dtype=float)), bc_left=lambda t: 0.0, bc_right=lambda t: 1.0, T=0.1)


def test_grid_lambda():
    grid = GridConfig.from_lambda(31, 2.5)
    assert grid.h == 1 / 32
    assert grid.lam == pytest.approx(2.5, rel=1e-12)
    assert grid.nodes[0] == 1 / 32 and grid.nodes.size == 31


# ── Von Neumann analysis ──────────────────────────────────────────


def test_fd2_factor_examples():
    assert amplification_factor(SchemeKind.FD2, 3.0, 0.0) == 1.0
    assert amplification_factor(SchemeKind.FD2, 1.0, math.pi) == pytest.approx(-1 / 3, abs=1e-15)
    huge = amplification_factor(SchemeKind.FD2, 1e8, math.pi)
    assert -1.0 <= huge < -0.999


@pytest.mark.parametrize("scheme", list(SchemeKind))
@pytest.mark.parametrize("lam", LAMBDAS)
def test_unconditional_stability(scheme, lam):
    theta = np.linspace(0.0, 2 * math.pi, 1000)
    assert np.max(np.abs(amplification_factor(scheme, lam, theta))) <= 1.0
    assert max_amplification(scheme, lam) <= 1.0


@pytest.mark.parametrize("scheme,step", [(SchemeKind.FD1, step_fd1), (SchemeKind.FD2, step_fd2)])
@pytest.mark.parametrize("p", [1, 3, 6])
def test_factor_matches_one_step_on_sine_mode(scheme, step, p):
    # sin(pπx_j) is an eigenvector of both schemes with zero boundary values
    problem = zero_problem()
    grid = GridConfig.from_lambda(15, 1.5)
    mode = np.sin(p * math.pi * grid.nodes)
    after = step(StateVector(t=0.0, values=mode), grid, problem)
    factor = amplification_factor(scheme, grid.lam, p * math.pi * grid.h)
    assert np.allclose(after.values, factor * mode, atol=1e-13, rtol=0)


def test_factor_needs_positive_lambda():
    with pytest.raises(HeatError):
        amplification_factor(SchemeKind.FD2, 0.0, 1.0)


# ── Time-derivative bounds ────────────────────────────────────────


def test_bound_comparison_examples():
    half = time_derivative_bound_comparison(0.01, 0.0, 4.0)
    assert (half.bound_new, half.bound_classical, half.ratio) == (0.01, 0.02, 0.5)

    flat = time_derivative_bound_comparison(0.01, 4.0, 4.0)
    assert flat.bound_new == 0.0 and flat.ratio == 0.0

    quarter = time_derivative_bound_comparison(0.01, 2.0, 4.0)
    assert quarter.bound_new == pytest.approx(0.005)
    assert quarter.bound_classical == pytest.approx(0.02)
    assert quarter.ratio == pytest.approx(0.25)


def test_bound_comparison_zero_over_zero():
    assert time_derivative_bound_comparison(0.01, 0.0, 0.0).ratio == 0.0


def test_bound_comparison_negative_m2_reports_ratio():
    result = time_derivative_bound_comparison(0.01, -4.0, 1.0)
    assert result.ratio == pytest.approx((5 / 4) / 2)


def test_bound_comparison_rejects_inverted_bounds():
    with pytest.raises(HeatError):
        time_derivative_bound_comparison(0.01, 2.0, 1.0)


@settings(max_examples=10_000, deadline=None)
@given(
    k=st.floats(min_value=1e-6, max_value=1.0),
    M2=st.floats(min_value=1e-3, max_value=1e3),
    fraction=st.floats(min_value=0.0, max_value=1.0),
)
def test_new_bound_at_least_two_times_smaller(k, M2, fraction):
    m2 = fraction * M2
    result = time_derivative_bound_comparison(k, m2, M2)
    assert result.bound_new <= result.bound_classical
    if m2 == 0.0:
        assert result.ratio == 0.5
    elif m2 >= 1e-6 * M2:
        assert result.ratio < 0.5
    else:
        assert result.ratio <= 0.5


@pytest.mark.parametrize("k", [0.01, 0.001, 1e-4])
@pytest.mark.parametrize("t", [0.0, 0.05])
def test_residuals_respect_their_bounds(sine_heat, k, t):
    m2, M2 = sine_heat.utt_bounds
    x = np.linspace(0.0, 1.0, 65)
    residuals = time_derivative_residuals(sine_heat.exact, sine_heat.exact_t, x, t, k)
    bounds = time_derivative_bound_comparison(k, m2, M2)
    assert residuals.classical <= bounds.bound_classical
    assert residuals.taylor_like <= bounds.bound_new
    assert residuals.taylor_like < residuals.classical
