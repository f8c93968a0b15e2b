"""Meshes of the unit interval."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


class MeshError(Exception):
    """Raised for invalid meshes or interpolation parameters."""


@dataclass(frozen=True, eq=False)
class Mesh:
    """Strictly increasing nodes x₀ = 0 < x₁ < … < x_{N+1} = 1."""

    nodes: np.ndarray
    widths: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        nodes = np.array(self.nodes, dtype=float)
        if nodes.ndim != 1 or nodes.size < 2:
            raise MeshError("a mesh needs at least the two nodes 0 and 1")
        if nodes[0] != 0.0 or nodes[-1] != 1.0:
            raise MeshError(f"mesh endpoints must be exactly 0 and 1, got {nodes[0]} and {nodes[-1]}")
        widths = np.diff(nodes)
        if np.any(widths <= 0):
            raise MeshError("mesh nodes must be strictly increasing")
        nodes.setflags(write=False)
        widths.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "widths", widths)

    @property
    def h(self) -> float:
        """Global mesh size max hᵢ."""
        return float(self.widths.max())

    @property
    def cells(self) -> int:
        return int(self.widths.size)

    def width_power_sum(self, power: int) -> float:
        """Σᵢ hᵢ^power."""
        return math.fsum(self.widths**power)


def build_uniform_mesh(cells: int) -> Mesh:
    """Uniform mesh with nodes i/cells, i = 0..cells."""
    if isinstance(cells, bool) or int(cells) != cells or cells < 1:
        raise MeshError(f"cells must be positive, got {cells}")
    return Mesh(np.arange(cells + 1, dtype=float) / cells)


def build_mesh(nodes: list[float] | np.ndarray) -> Mesh:
    """Mesh from explicit nodes (validated)."""
    return Mesh(np.asarray(nodes, dtype=float))


def build_graded_mesh(cells: int, grading: float = 2.0) -> Mesh:
    """Graded mesh xᵢ = (i/cells)^grading, refined towards 0 for grading > 1."""
    if grading <= 0:
        raise MeshError(f"grading must be positive, got {grading}")
    uniform = build_uniform_mesh(cells).nodes
    return Mesh(uniform**grading)
