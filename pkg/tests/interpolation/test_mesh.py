"""Tests for unit-interval meshes and the P1 interpolant."""

import numpy as np
import pytest

from taylorlike.functions.registry import DomainViolationError, FunctionSpec, lookup
from taylorlike.interpolation import (
    MeshError,
    build_graded_mesh,
    build_mesh,
    build_uniform_mesh,
    interpolate,
)


def test_uniform_mesh_two_cells():
    mesh = build_uniform_mesh(2)
    assert mesh.nodes.tolist() == [0.0, 0.5, 1.0]
    assert mesh.h == 0.5


def test_uniform_mesh_ten_cells():
    mesh = build_uniform_mesh(10)
    assert mesh.h == pytest.approx(0.1, abs=1e-16)
    assert abs(mesh.width_power_sum(1) - 1.0) <= 1e-14


def test_single_cell_mesh():
    assert build_uniform_mesh(1).nodes.tolist() == [0.0, 1.0]


@pytest.mark.parametrize("cells", [0, -3])
def test_uniform_mesh_needs_cells(cells):
    with pytest.raises(MeshError):
        build_uniform_mesh(cells)


def test_explicit_mesh_validation():
    assert build_mesh([0.0, 0.2, 1.0]).h == 0.8
    with pytest.raises(MeshError):
        build_mesh([0.0, 0.5, 0.5, 1.0])
    with pytest.raises(MeshError):
        build_mesh([0.1, 1.0])


def test_mesh_is_read_only():
    mesh = build_uniform_mesh(4)
    with pytest.raises(ValueError):
        mesh.nodes[1] = 0.3


def test_graded_mesh_refines_towards_zero():
    mesh = build_graded_mesh(8, grading=2.0)
    assert mesh.nodes[0] == 0.0 and mesh.nodes[-1] == 1.0
    assert np.all(np.diff(mesh.widths) > 0)
    assert mesh.h == pytest.approx(1 - (7 / 8) ** 2)


def test_interpolate_bump_values():
    interp = interpolate(lookup("bump"), build_uniform_mesh(2))
    assert interp.values.tolist() == [0.0, 0.25, 0.0]


def test_interpolant_hits_nodes_and_is_affine_per_cell():
    mesh = build_graded_mesh(5, 1.5)
    interp = interpolate(lookup("exp"), mesh)
    assert np.array_equal(interp(mesh.nodes), interp.values)
    for left, right in zip(mesh.nodes[:-1], mesh.nodes[1:]):
        x = np.linspace(left, right, 3)
        y = interp(x)
        assert abs(y[0] - 2 * y[1] + y[2]) <= 1e-12


def test_interpolant_reproduces_affine_function():
    mesh = build_mesh([0.0, 0.3, 0.35, 1.0])
    interp = interpolate(lookup("affine"), mesh)
    x = np.linspace(0.0, 1.0, 101)
    assert np.allclose(interp(x), 2 * x + 1, atol=1e-14)
    assert np.allclose(interp.derivative(x), 2.0, atol=1e-13)


def test_interpolate_checks_domain():
    narrow = FunctionSpec(
        id="narrow",
        f=np.sin,
        f_prime=np.cos,
        f_second=lambda x: -np.sin(x),
        domain=(0.0, 0.5),
    )
    with pytest.raises(DomainViolationError):
        interpolate(narrow, build_uniform_mesh(4))
