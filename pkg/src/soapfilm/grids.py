"""Uniform-grid plumbing: sampled test functions, quadrature, derivatives.

All integrals in the library run composite Simpson on uniform grids and all
sampled derivatives are centered differences (second-order one-sided at the
endpoints), so that every quadrature-based quantity converges at a clean
O(n^-2) rate dominated by the differentiation error. Keeping both in one
place makes Richardson checks of that rate meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = ["TestFunction", "composite_simpson", "sampled_derivative", "check_uniform_grid"]


def check_uniform_grid(grid: np.ndarray) -> float:
    """Validate a strictly increasing uniform grid; return its spacing."""
    if grid.ndim != 1 or grid.size < 3:
        raise ValueError("grid must be one-dimensional with at least 3 points")
    steps = np.diff(grid)
    if not np.all(steps > 0.0):
        raise ValueError("grid must be strictly increasing")
    dx = (grid[-1] - grid[0]) / (grid.size - 1)
    scale = max(1.0, abs(grid[0]), abs(grid[-1]))
    if np.max(np.abs(steps - dx)) > 1e-14 * scale:
        raise ValueError("grid spacing is not uniform to within 1e-14")
    return float(dx)


def composite_simpson(values: np.ndarray, dx: float) -> float:
    """Composite Simpson rule on a uniform grid.

    An odd interval count is handled with the 3/8 rule on the last three
    intervals, keeping the overall order. Requires at least 5 samples.
    """
    values = np.asarray(values, dtype=float)
    m = values.size - 1
    if m < 4:
        raise ValueError("composite Simpson needs at least 5 samples")
    if m % 2 == 1:
        head = composite_simpson(values[: m - 2], dx)
        tail = 3.0 * dx / 8.0 * (values[-4] + 3.0 * values[-3] + 3.0 * values[-2] + values[-1])
        return head + tail
    w = np.ones(m + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return float(np.dot(w, values)) * dx / 3.0


def sampled_derivative(values: np.ndarray, dx: float) -> np.ndarray:
    """Centered differences in the interior, 3-point one-sided at the ends."""
    return np.gradient(np.asarray(values, dtype=float), dx, edge_order=2)


@dataclass
class TestFunction:
    """A perturbation direction sampled on a symmetric uniform grid.

    Admissible directions vanish at both endpoints of [-a, a]; the endpoint
    samples must be exactly 0.0 so that boundary terms drop out of every
    integration by parts without residue.
    """

    # Not a test case despite the Test* name; keeps pytest collection quiet.
    __test__ = False

    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        self.grid = np.asarray(self.grid, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.grid.shape != self.values.shape:
            raise ValueError("grid and values must have the same shape")
        if self.n < 16:
            raise ValueError(f"need at least 16 samples, got {self.n}")
        a = self.grid[-1]
        if abs(self.grid[0] + a) > 1e-14 * max(1.0, abs(a)):
            raise ValueError("grid must span a symmetric interval [-a, a]")
        check_uniform_grid(self.grid)
        if self.values[0] != 0.0 or self.values[-1] != 0.0:
            raise ValueError("endpoint values must be exactly zero")

    @property
    def n(self) -> int:
        return self.values.size

    @property
    def halfwidth(self) -> float:
        return float(self.grid[-1])

    @property
    def spacing(self) -> float:
        return float((self.grid[-1] - self.grid[0]) / (self.n - 1))

    @classmethod
    def sample(cls, fn: Callable[[np.ndarray], np.ndarray], halfwidth: float, n: int) -> "TestFunction":
        """Sample a callable on [-halfwidth, halfwidth], clamping the ends to 0.

        The clamp removes the roundoff residue of functions that vanish at the
        endpoints only up to floating-point error.
        """
        grid = np.linspace(-halfwidth, halfwidth, n)
        values = np.asarray(fn(grid), dtype=float).copy()
        values[0] = 0.0
        values[-1] = 0.0
        return cls(grid, values)
