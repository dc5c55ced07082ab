"""Dirichlet string spectrum for the density 2/cosh^2(s) on [-tau, tau].

The stability of a catenoid reduces to the eigenvalue problem

    psi'' + lambda * (2/cosh^2 s) * psi = 0,   psi(-tau) = psi(tau) = 0,

whose first eigenvalue crosses 1 exactly at tau = tau_star. The primary
solver shoots from s = -tau with fixed-step RK4 and brackets each eigenvalue
by the Sturm node count; dense_eigenvalues solves the same problem as a
finite-difference matrix eigenproblem and serves as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .config import DEFAULTS
from .errors import (
    ConvergenceFailureError,
    DomainError,
    NotSupercriticalError,
    ZeroDenominatorError,
)
from .extremals import critical_constants
from .grids import TestFunction, composite_simpson, sampled_derivative
from .rootfind import Bracket, find_root_bracketed

__all__ = [
    "DENSITY_ID",
    "StringSpectrum",
    "shoot",
    "eigenvalues",
    "dense_eigenvalues",
    "rayleigh_quotient",
    "negative_direction",
]

DENSITY_ID = "2/cosh^2(s)"

_MIN_STEPS = 256
_DOUBLING_CAP = 60
_BRACKET_CAP = 200


def _density(s: float) -> float:
    return 2.0 / math.cosh(s) ** 2


def _check_problem(tau: float, n: int) -> None:
    if tau <= 0.0:
        raise DomainError(f"half-interval must be positive, got {tau!r}")
    if n < _MIN_STEPS:
        raise DomainError(f"need at least {_MIN_STEPS} integration steps, got {n!r}")


def _rk4_sweep(tau: float, lam: float, n: int, keep_trajectory: bool):
    """Shared RK4 march; returns (end_value, node_count, trajectory-or-None)."""
    dt = 2.0 * tau / n
    # lam * rho sampled on the half-step grid: index 2i is node i, 2i+1 its midpoint
    q = [lam * _density(-tau + 0.5 * i * dt) for i in range(2 * n + 1)]
    u = 0.0
    v = 1.0
    nodes = 0
    last_sign = 0
    half = 0.5 * dt
    sixth = dt / 6.0
    trajectory = [0.0] if keep_trajectory else None
    for i in range(n):
        q0 = q[2 * i]
        qh = q[2 * i + 1]
        q1 = q[2 * i + 2]
        a1v = -q0 * u
        u2 = u + half * v
        v2 = v + half * a1v
        a2v = -qh * u2
        u3 = u + half * v2
        v3 = v + half * a2v
        a3v = -qh * u3
        u4 = u + dt * v3
        v4 = v + dt * a3v
        a4v = -q1 * u4
        u = u + sixth * (v + 2.0 * v2 + 2.0 * v3 + v4)
        v = v + sixth * (a1v + 2.0 * a2v + 2.0 * a3v + a4v)
        if keep_trajectory:
            trajectory.append(u)
        if u > 0.0:
            sign = 1
        elif u < 0.0:
            sign = -1
        else:
            sign = 0
        if sign != 0:
            if last_sign != 0 and sign != last_sign:
                nodes += 1
            last_sign = sign
    return u, nodes, trajectory


def shoot(tau: float, lam: float, n: int = DEFAULTS.spectrum_steps) -> Tuple[float, int]:
    """Integrate psi'' + lam*rho*psi = 0 from (psi, psi')(-tau) = (0, 1).

    Returns psi(tau) and the number of sign changes the solution makes after
    leaving the initial zero (the Sturm oscillation count used to bracket
    eigenvalues). Fixed-step RK4; deterministic for given (tau, lam, n).
    """
    _check_problem(tau, n)
    end_value, nodes, _ = _rk4_sweep(tau, lam, n, keep_trajectory=False)
    return end_value, nodes


@dataclass
class StringSpectrum:
    """First eigenvalues and normalized eigenfunctions of the string problem."""

    tau: float
    lambdas: np.ndarray
    eigenfunctions: List[TestFunction]
    density_id: str = DENSITY_ID

    def __post_init__(self) -> None:
        self.lambdas = np.asarray(self.lambdas, dtype=float)
        if np.any(self.lambdas <= 0.0):
            raise ValueError("string eigenvalues must be positive")
        if np.any(np.diff(self.lambdas) <= 0.0):
            raise ValueError("string eigenvalues must be strictly increasing")
        if len(self.eigenfunctions) != self.lambdas.size:
            raise ValueError("one eigenfunction per eigenvalue required")


def _bracket_by_nodes(tau: float, k: int, lam_hi: float, n: int) -> Tuple[float, float]:
    """Shrink [lo, hi] until the node counts are exactly k-1 and k.

    The node count is nondecreasing in lambda and jumps by one at each
    eigenvalue, so bisection pins the k-th jump; the end values at such a
    bracket have opposite signs.
    """
    lo, hi = 0.0, lam_hi
    nodes_lo = 0
    nodes_hi = shoot(tau, hi, n)[1]
    for _ in range(_BRACKET_CAP):
        if nodes_lo == k - 1 and nodes_hi == k:
            return lo, hi
        mid = 0.5 * (lo + hi)
        nodes_mid = shoot(tau, mid, n)[1]
        if nodes_mid <= k - 1:
            lo, nodes_lo = mid, nodes_mid
        else:
            hi, nodes_hi = mid, nodes_mid
    raise ConvergenceFailureError(f"could not isolate eigenvalue {k} by node count")


def eigenvalues(tau: float, k_max: int, n: int = DEFAULTS.spectrum_steps) -> StringSpectrum:
    """First k_max Dirichlet eigenvalues by shooting, with eigenfunctions.

    Brackets each lambda_k between node counts k-1 and k, then solves
    psi(tau; lambda) = 0 on the bracket. Eigenfunctions are RK4 trajectories
    normalized to unit weighted norm (weight 2/cosh^2 s) with psi'(-tau) > 0.

    Raises ConvergenceFailure if no lambda with k_max nodes is found under a
    geometrically grown ceiling (that would be a bug, not a domain outcome).
    """
    _check_problem(tau, n)
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max!r}")

    lam_hi = 1.0
    for _ in range(_DOUBLING_CAP):
        if shoot(tau, lam_hi, n)[1] >= k_max:
            break
        lam_hi *= 2.0
    else:
        raise ConvergenceFailureError(f"no lambda below {lam_hi} has {k_max} nodes")

    lams = []
    functions = []
    grid = np.linspace(-tau, tau, n + 1)
    weight = np.array([_density(s) for s in grid])
    for k in range(1, k_max + 1):
        lo, hi = _bracket_by_nodes(tau, k, lam_hi, n)

        def end_value(lam: float) -> float:
            return shoot(tau, lam, n)[0]

        bracket = Bracket(lo, hi, end_value(lo), end_value(hi))
        lam_k = find_root_bracketed(
            end_value, bracket, tol_x=1e-12 * max(1.0, hi), tol_f=1e-13
        )
        _, _, trajectory = _rk4_sweep(tau, lam_k, n, keep_trajectory=True)
        values = np.asarray(trajectory)
        values[-1] = 0.0
        norm = composite_simpson(weight * values * values, grid[1] - grid[0])
        values = values / math.sqrt(norm)
        lams.append(lam_k)
        functions.append(TestFunction(grid=grid, values=values))
    return StringSpectrum(tau=tau, lambdas=np.array(lams), eigenfunctions=functions)


def dense_eigenvalues(tau: float, k_max: int, m: int = 4096) -> np.ndarray:
    """Independent check: 3-point finite differences as a matrix eigenproblem.

    Discretizing -psi'' = lambda*rho*psi on m intervals and scaling by
    rho^(-1/2) gives a symmetric tridiagonal standard problem; the smallest
    k_max eigenvalues come from a direct tridiagonal solver. No code shared
    with the shooting route.
    """
    _check_problem(tau, m)
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max!r}")
    ds = 2.0 * tau / m
    s = np.linspace(-tau, tau, m + 1)[1:-1]
    rho = 2.0 / np.cosh(s) ** 2
    inv_sqrt = 1.0 / np.sqrt(rho)
    diag = 2.0 / (ds * ds * rho)
    off = -inv_sqrt[:-1] * inv_sqrt[1:] / (ds * ds)
    return eigh_tridiagonal(
        diag, off, eigvals_only=True, select="i", select_range=(0, k_max - 1)
    )


def rayleigh_quotient(psi: TestFunction) -> float:
    """Quotient of integral psi'^2 over integral (2/cosh^2 s) psi^2.

    Its minimum over admissible directions is the first eigenvalue; on any
    sampled direction it bounds lambda_1 from above.
    """
    dpsi = sampled_derivative(psi.values, psi.spacing)
    numerator = composite_simpson(dpsi * dpsi, psi.spacing)
    weight = 2.0 / np.cosh(psi.grid) ** 2
    denominator = composite_simpson(weight * psi.values * psi.values, psi.spacing)
    if denominator < 1e-14:
        raise ZeroDenominatorError("weighted norm of psi is numerically zero")
    return numerator / denominator


def negative_direction(tau: float, n: int = DEFAULTS.spectrum_steps) -> TestFunction:
    """A direction with negative quadratic form, available once tau > tau_star.

    Returns the normalized ground eigenfunction psi_1(.; tau); its form value
    is lambda_1 - 1 by the normalization, negative exactly when tau exceeds
    tau_star.
    """
    tau_star = critical_constants().tau_star
    if tau <= tau_star + 1e-9:
        raise NotSupercriticalError(
            f"tau={tau!r} does not exceed tau_star={tau_star!r}; no negative direction exists"
        )
    psi = eigenvalues(tau, 1, n).eigenfunctions[0]
    dpsi = sampled_derivative(psi.values, psi.spacing)
    weight = 2.0 / np.cosh(psi.grid) ** 2
    q_estimate = composite_simpson(dpsi * dpsi - weight * psi.values * psi.values, psi.spacing)
    if q_estimate >= 0.0:
        raise ConvergenceFailureError(
            f"ground direction at tau={tau!r} failed to certify negativity"
        )
    return psi
