"""Areas, the collapsed-film threshold, and the force between the rings.

The two-disk (collapsed) configuration has total area 2*pi for unit rings.
goldschmidt_constant finds the half-distance at which the stable catenoid's
area crosses that value; force evaluates the attraction F = -4*pi*h/tau_1
the film exerts on the rings, together with its h-derivative.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULTS, TWO_PI
from .errors import DomainError, NoExtremalError, NonPositiveProfileError
from .grids import check_uniform_grid, composite_simpson, sampled_derivative
from .extremals import critical_constants, solve_branches
from .rootfind import Bracket, find_root_bracketed

__all__ = [
    "area_quadrature",
    "r_of_tau",
    "goldschmidt_constant",
    "ForceSample",
    "force",
]


def area_quadrature(grid: np.ndarray, y: np.ndarray) -> float:
    """Surface area 2*pi * integral of y*sqrt(1+y'^2) over a sampled profile.

    grid must be uniform; y must be strictly positive (a graph that touches
    the axis is not a film radius). The derivative uses second-order
    differences, the integral composite Simpson.
    """
    dx = check_uniform_grid(grid)
    y = np.asarray(y, dtype=float)
    if y.shape != grid.shape:
        raise ValueError("grid and y must have the same shape")
    if np.any(y <= 0.0):
        raise NonPositiveProfileError("profile must be strictly positive")
    dy = sampled_derivative(y, dx)
    return composite_simpson(TWO_PI * y * np.sqrt(1.0 + dy * dy), dx)


def r_of_tau(tau: float) -> float:
    """Scaled area 2/tau + sinh(2*tau)/tau^2, i.e. area / (pi*h^2)."""
    if tau <= 0.0:
        raise DomainError(f"r_of_tau requires tau > 0, got {tau!r}")
    return 2.0 / tau + math.sinh(2.0 * tau) / (tau * tau)


@functools.cache
def goldschmidt_constant() -> float:
    """Half-distance where the stable catenoid's area equals the disks' 2*pi.

    Cached after the first solve. Below the returned value the film beats the
    two flat disks; above it the disks win even though the catenoid persists
    up to h_star.
    """

    def excess(h: float) -> float:
        lower, _ = solve_branches(h)
        h2 = h * h
        return math.pi * h2 * r_of_tau(lower.tau) - TWO_PI

    h_star = critical_constants().h_star
    bracket = Bracket.from_function(excess, 0.1, h_star)
    h_g = find_root_bracketed(excess, bracket, tol_x=1e-13, tol_f=1e-11)
    lower, _ = solve_branches(h_g)
    if abs(math.pi * h_g * h_g * r_of_tau(lower.tau) - TWO_PI) > 1e-10:
        raise AssertionError("threshold solve did not reach the disk area")
    return h_g


@dataclass(frozen=True)
class ForceSample:
    """Ring force at one half-distance, with its finite-difference slope."""

    h: float
    force: float
    dforce_dh: float


def force(h: float) -> ForceSample:
    """Attractive force F(h) = -4*pi*h/tau_1 on either ring, and dF/dh.

    The derivative is a centered difference with a step that shrinks near
    h_star, where tau_1(h) and hence F has a vertical tangent.

    Raises NoExtremalError at or beyond the critical half-distance (force
    exactly at h_star is one-sided and not reported).
    """
    cc = critical_constants()
    if h >= cc.h_star:
        raise NoExtremalError(h, cc.h_star)

    def f_of(hh: float) -> float:
        lower, _ = solve_branches(hh)
        return -2.0 * TWO_PI * hh / lower.tau

    value = f_of(h)
    if value >= 0.0:
        raise AssertionError("ring force must be attractive (negative)")
    step = min(1e-6, (cc.h_star - h) / 10.0)
    slope = (f_of(h + step) - f_of(h - step)) / (2.0 * step)
    return ForceSample(h=h, force=value, dforce_dh=slope)
