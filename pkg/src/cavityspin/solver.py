"""Eigenvalue search for the spin-up cavity states.

The bound-state window for axial index m is eps_min < eps < eps_min + U with
eps_min = sqrt((mc^2)^2 + (hbar c k)^2) - mc^2. Inside it the interior wave
number zeta and exterior decay constant xi are real and positive, and
matching the large and small spinor components at rho = R leaves the single
condition

    zeta J_l'(zeta R) K_l(xi R) - xi K_l'(xi R) J_l(zeta R) = 0

(the -l/R terms of the fourth component cancel once J_l(zeta R) = kappa K_l(xi R)).
Roots are bracketed by a dense scan and refined with Brent's method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import optimize

from .constants import constants
from .fields import normalization, normalization_closed_form
from .model import CavityGeometry, EigenState, QuantumNumbers
from .quadrature import QuadratureConfig
from .specfun import bessel_j, bessel_j_deriv, bessel_k, bessel_k_deriv


class BoundStateError(Exception):
    """No eigenstate matches the request."""


class NoBoundStateError(BoundStateError):
    pass


class RadialIndexError(BoundStateError):
    pass


class RootConvergenceError(BoundStateError):
    pass


@dataclass(frozen=True)
class SolverConfig:
    scan_points: int = 2000
    root_rel_tol: float = 1e-12
    max_iterations: int = 200
    normalization_rel_tol: float = 1e-9

    def __post_init__(self):
        if self.scan_points < 100:
            raise ValueError("scan_points must be >= 100")
        if not 0 < self.root_rel_tol <= 1e-6:
            raise ValueError("root_rel_tol must lie in (0, 1e-6]")


class WaveNumbers(NamedTuple):
    zeta: float
    xi: float
    k_axial: float


def axial_wavenumber(geometry: CavityGeometry, m_axial: int) -> float:
    if m_axial < 1 or m_axial % 2 == 0:
        raise ValueError(f"m must be odd and >= 1, got {m_axial}")
    return m_axial * math.pi / (2.0 * geometry.half_height_d)


def bound_window(geometry: CavityGeometry, m_axial: int) -> tuple[float, float]:
    """Open interval (eps_min, eps_max) in eV where bound states can exist."""
    c = constants()
    mc2 = c.electron_rest_energy
    p = c.hbar_c * axial_wavenumber(geometry, m_axial)
    eps_min = p * p / (math.sqrt(mc2 * mc2 + p * p) + mc2)
    return eps_min, eps_min + geometry.barrier_U


def wave_numbers(geometry: CavityGeometry, m_axial: int, epsilon: float) -> WaveNumbers:
    """Interior wave number and exterior decay constant at energy ``epsilon``.

    Both squares are written as products of differences of total energies,
    E^2 - E_min^2 = (E - E_min)(E + E_min), so no meV-scale quantity is
    recovered by subtracting numbers of order mc^2.
    """
    c = constants()
    mc2 = c.electron_rest_energy
    k = axial_wavenumber(geometry, m_axial)
    eps_min, eps_max = bound_window(geometry, m_axial)
    if epsilon < eps_min:
        raise ValueError(f"epsilon={epsilon:g} eV below the window edge eps_min={eps_min:g} eV "
                         "(zeta^2 < 0: no interior oscillation)")
    if epsilon > eps_max:
        raise ValueError(f"epsilon={epsilon:g} eV above eps_max={eps_max:g} eV "
                         "(xi^2 < 0: state not confined by the barrier)")
    zeta2 = (epsilon - eps_min) * (2 * mc2 + epsilon + eps_min)
    xi2 = (eps_max - epsilon) * (2 * mc2 + eps_min + epsilon - geometry.barrier_U)
    return WaveNumbers(math.sqrt(zeta2) / c.hbar_c, math.sqrt(xi2) / c.hbar_c, k)


def boundary_residual(geometry: CavityGeometry, l: int, m_axial: int, epsilon: float,
                      exact_eta: bool = False) -> float:
    """Normalized matching residual G(eps), O(1) in scale.

    With ``exact_eta`` the fourth-component match keeps the distinct
    region I/II small-component factors instead of their common limit.
    """
    zeta, xi, _ = wave_numbers(geometry, m_axial, epsilon)
    R = geometry.radius_R
    X, Y = zeta * R, xi * R
    if exact_eta:
        c = constants()
        mc2 = c.electron_rest_energy
        eta_ratio = (2 * mc2 + epsilon - geometry.barrier_U) / (2 * mc2 + epsilon)
        # eta_I (zeta J' - l J/R) K = eta_II (xi K' - l K/R) J, divided by eta_II
        t1 = eta_ratio * (zeta * bessel_j_deriv(l, X) - l / R * bessel_j(l, X)) * bessel_k(l, Y)
        t2 = (xi * bessel_k_deriv(l, Y) - l / R * bessel_k(l, Y)) * bessel_j(l, X)
    else:
        t1 = zeta * bessel_j_deriv(l, X) * bessel_k(l, Y)
        t2 = xi * bessel_k_deriv(l, Y) * bessel_j(l, X)
    scale = max(abs(t1), abs(t2))
    if scale == 0.0:
        return 0.0
    return (t1 - t2) / scale


def scan_residual(geometry: CavityGeometry, l: int, m_axial: int, scan_points: int = 2000,
                  exact_eta: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Residual sampled at ``scan_points`` energies strictly inside the window."""
    lo, hi = bound_window(geometry, m_axial)
    eps = np.linspace(lo, hi, scan_points + 2)[1:-1]
    g = np.array([boundary_residual(geometry, l, m_axial, e, exact_eta) for e in eps])
    return eps, g


def find_brackets(eps: np.ndarray, residual: np.ndarray) -> list[tuple[float, float]]:
    """Sign-change intervals of a sampled residual, in ascending energy."""
    brackets = []
    for i in range(len(eps) - 1):
        a, b = residual[i], residual[i + 1]
        if a == 0.0:
            brackets.append((eps[i], eps[i]))
        elif a * b < 0:
            brackets.append((eps[i], eps[i + 1]))
    return brackets


def solve_eigenstate(geometry: CavityGeometry, qnums: QuantumNumbers,
                     solver_cfg: SolverConfig | None = None,
                     quad_cfg: QuadratureConfig | None = None,
                     exact_eta: bool = False) -> EigenState:
    """Locate the ``n_radial``-th root of the matching condition and build the state."""
    cfg = solver_cfg or SolverConfig()
    l, m = qnums.l_azimuthal, qnums.m_axial
    eps, g = scan_residual(geometry, l, m, cfg.scan_points, exact_eta)
    brackets = find_brackets(eps, g)
    if not brackets:
        raise NoBoundStateError(
            f"no bound state in window for l={l}, m={m} "
            f"(U={geometry.barrier_U * 1e3:g} meV, R={geometry.radius_R:g} nm)")
    if qnums.n_radial > len(brackets):
        raise RadialIndexError(
            f"n={qnums.n_radial} exceeds the {len(brackets)} radial state(s) found for l={l}, m={m}")
    a, b = brackets[qnums.n_radial - 1]
    if a == b:
        root = a
    else:
        try:
            root = optimize.brentq(lambda e: boundary_residual(geometry, l, m, e, exact_eta), a, b,
                                   xtol=1e-300, rtol=cfg.root_rel_tol, maxiter=cfg.max_iterations)
        except RuntimeError as exc:
            raise RootConvergenceError(str(exc)) from exc

    zeta, xi, k = wave_numbers(geometry, m, root)
    R = geometry.radius_R
    kappa = bessel_j(l, zeta * R) / bessel_k(l, xi * R)
    n2 = normalization(geometry, l, zeta, xi, kappa, quad_cfg)
    n2_exact = normalization_closed_form(geometry, l, zeta, xi, kappa)
    if abs(n2 - n2_exact) > cfg.normalization_rel_tol * abs(n2_exact):
        raise ArithmeticError(f"normalization routes disagree: quadrature {n2!r} vs closed form {n2_exact!r}")
    return EigenState(
        geometry=geometry, qnums=qnums, epsilon=root, k_axial=k, zeta=zeta, xi=xi,
        kappa=kappa, n_squared=n2,
        boundary_residual=boundary_residual(geometry, l, m, root, exact_eta),
    )


def find_all_states(geometry: CavityGeometry, l: int = 0, m_axial: int = 1,
                    solver_cfg: SolverConfig | None = None,
                    quad_cfg: QuadratureConfig | None = None) -> list[EigenState]:
    """Every radial state for the given (l, m), in ascending energy."""
    cfg = solver_cfg or SolverConfig()
    eps, g = scan_residual(geometry, l, m_axial, cfg.scan_points)
    count = len(find_brackets(eps, g))
    return [solve_eigenstate(geometry, QuantumNumbers(n, l, m_axial), cfg, quad_cfg)
            for n in range(1, count + 1)]
