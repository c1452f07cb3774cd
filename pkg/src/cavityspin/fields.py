"""Bispinor wavefunction, four-current and normalization of a cavity eigenstate.

Densities are in units of e nm^-3 (charge, with e = 1) and e c nm^-3
(current). The spin-up bispinor in regions I/II is

    c1 = N u(rho) e^{il phi} cos(kz)
    c2 = 0
    c3 = -i eta k u(rho) e^{il phi} sin(kz)
    c4 = i eta F(rho) e^{i(l+1) phi} cos(kz)

with u = J_l(zeta rho) inside, kappa K_l(xi rho) outside, and F the
first-order radial stencil u' - l u / rho, which reduces to
-zeta J_{l+1}(zeta rho) and -kappa xi K_{l+1}(xi rho) respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .constants import constants
from .integrals import RadialIntegrals, closed_form_integrals
from .model import CavityGeometry, EigenState, Region, classify_point
from .quadrature import QuadratureConfig, integrate, integrate_tail
from .specfun import bessel_j, bessel_k


def alpha_matrices(phi: float):
    """Return (alpha_rho, alpha_phi, alpha_z) at azimuth ``phi``."""
    ep, em = np.exp(1j * phi), np.exp(-1j * phi)
    a_rho = np.array([[0, 0, 0, em],
                      [0, 0, ep, 0],
                      [0, em, 0, 0],
                      [ep, 0, 0, 0]], dtype=complex)
    a_phi = np.array([[0, 0, 0, -1j * em],
                      [0, 0, 1j * ep, 0],
                      [0, -1j * em, 0, 0],
                      [1j * ep, 0, 0, 0]], dtype=complex)
    a_z = np.array([[0, 0, 1, 0],
                    [0, 0, 0, -1],
                    [1, 0, 0, 0],
                    [0, -1, 0, 0]], dtype=complex)
    return a_rho, a_phi, a_z


@dataclass(frozen=True)
class Bispinor:
    c1: complex
    c2: complex
    c3: complex
    c4: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3, self.c4], dtype=complex)


@dataclass(frozen=True)
class FieldSample:
    rho: float
    z: float
    charge: float
    j_rho: float
    j_phi: float
    j_z: float
    probability: float


def radial_large(l, zeta, xi, kappa, R, rho):
    """Large-component radial profile u(rho), vectorized over ``rho``."""
    rho = np.asarray(rho, dtype=float)
    out = np.empty_like(rho)
    inside = rho < R
    out[inside] = bessel_j(l, zeta * rho[inside])
    out[~inside] = kappa * np.asarray(bessel_k(l, xi * rho[~inside]))
    return out


def radial_small(l, zeta, xi, kappa, R, rho):
    """Small-component radial factor F(rho) = u' - l u / rho, vectorized."""
    rho = np.asarray(rho, dtype=float)
    out = np.empty_like(rho)
    inside = rho < R
    out[inside] = -zeta * np.asarray(bessel_j(l + 1, zeta * rho[inside]))
    out[~inside] = -kappa * xi * np.asarray(bessel_k(l + 1, xi * rho[~inside]))
    return out


def _profiles(state: EigenState, rho):
    g = state.geometry
    u = radial_large(state.l, state.zeta, state.xi, state.kappa, g.radius_R, rho)
    F = radial_small(state.l, state.zeta, state.xi, state.kappa, g.radius_R, rho)
    return u, F


def _eta(state: EigenState, rho, exact_eta: bool):
    if not exact_eta:
        return np.full(np.shape(rho), constants().eta)
    return np.where(np.asarray(rho) < state.geometry.radius_R, state.eta_inside, state.eta_outside)


def bispinor_at(state: EigenState, rho: float, phi: float, z: float,
                exact_eta: bool = False) -> Bispinor:
    """Evaluate the four spinor components (units nm^-3/2, N included)."""
    if classify_point(state.geometry, rho, z) is Region.III:
        return Bispinor(0j, 0j, 0j, 0j)
    u, F = (float(a[0]) for a in _profiles(state, np.array([rho])))
    eta = float(_eta(state, np.array([rho]), exact_eta)[0])
    N = math.sqrt(state.n_squared)
    k = state.k_axial
    az = np.exp(1j * state.l * phi)
    return Bispinor(
        c1=N * u * az * math.cos(k * z),
        c2=0j,
        c3=-1j * eta * k * N * u * az * math.sin(k * z),
        c4=1j * eta * N * F * az * np.exp(1j * phi) * math.cos(k * z),
    )


def _region_weight(state: EigenState, rho, z):
    """cos^2(kz) inside |z| < d, zero in region III."""
    z = np.asarray(z, dtype=float)
    w = np.cos(state.k_axial * z) ** 2
    return np.where(np.abs(z) < state.geometry.half_height_d, w, 0.0)


def charge_density(state: EigenState, rho, z, include_small: bool = False):
    """Charge density q(rho, z) in e nm^-3.

    By default only the large component contributes; ``include_small`` adds
    the O(eta^2) small-component term.
    """
    rho, z = np.broadcast_arrays(np.asarray(rho, dtype=float), np.asarray(z, dtype=float))
    u, F = _profiles(state, rho.ravel())
    u, F = u.reshape(rho.shape), F.reshape(rho.shape)
    q = state.n_squared * u * u * _region_weight(state, rho, z)
    if include_small:
        eta = _eta(state, rho, exact_eta=False)
        k = state.k_axial
        zin = np.abs(z) < state.geometry.half_height_d
        small = eta**2 * ((k * u * np.sin(k * z)) ** 2 + (F * np.cos(k * z)) ** 2)
        q = q + state.n_squared * np.where(zin, small, 0.0)
    return q[()] if q.ndim == 0 else q


def probability_density(state: EigenState, rho, z):
    return charge_density(state, rho, z)


def current_density(state: EigenState, rho, z, exact_eta: bool = False):
    """Return (j_rho, j_phi, j_z) in e c nm^-3; only j_phi is nonzero."""
    rho, z = np.broadcast_arrays(np.asarray(rho, dtype=float), np.asarray(z, dtype=float))
    u, F = _profiles(state, rho.ravel())
    u, F = u.reshape(rho.shape), F.reshape(rho.shape)
    eta = _eta(state, rho, exact_eta)
    j_phi = 2.0 * state.n_squared * eta * u * F * _region_weight(state, rho, z)
    zero = np.zeros_like(j_phi)
    if j_phi.ndim == 0:
        return 0.0, float(j_phi), 0.0
    return zero, j_phi, zero


def current_density_oracle(state: EigenState, rho: float, phi: float, z: float,
                           exact_eta: bool = False):
    """Current components from the bispinor quadratic forms psi^dagger alpha psi."""
    if rho <= 0:
        raise ValueError("oracle requires rho > 0")
    psi = bispinor_at(state, rho, phi, z, exact_eta=exact_eta).as_array()
    return tuple(float(np.real(np.vdot(psi, a @ psi))) for a in alpha_matrices(phi))


def field_sample(state: EigenState, rho: float, z: float) -> FieldSample:
    q = float(charge_density(state, rho, z))
    j_rho, j_phi, j_z = current_density(state, rho, z)
    return FieldSample(rho, z, q, j_rho, j_phi, j_z, q)


def quadrature_integrals(geometry: CavityGeometry, l: int, zeta: float, xi: float,
                         kappa: float, quad_cfg: QuadratureConfig | None = None) -> RadialIntegrals:
    """Evaluate the radial weights of a state by adaptive quadrature."""
    R = geometry.radius_R
    k2 = kappa * kappa

    def u_in(r):
        return bessel_j(l, zeta * r)

    def u_out(r):
        return bessel_k(l, xi * r)

    def f_in(r):
        return -zeta * bessel_j(l + 1, zeta * r)

    def f_out(r):
        return -xi * bessel_k(l + 1, xi * r)

    norm_I = integrate(lambda r: u_in(r) ** 2 * r, 0.0, R, quad_cfg).value
    norm_II = integrate_tail(lambda r: u_out(r) ** 2 * r, R, 2 * xi, quad_cfg).value
    wave_I = integrate(lambda r: u_in(r) * f_in(r) * r * r, 0.0, R, quad_cfg).value
    wave_II = integrate_tail(lambda r: u_out(r) * f_out(r) * r * r, R, 2 * xi, quad_cfg).value
    return RadialIntegrals(norm_I, k2 * norm_II, wave_I, k2 * wave_II)


def normalization(geometry: CavityGeometry, l: int, zeta: float, xi: float, kappa: float,
                  quad_cfg: QuadratureConfig | None = None) -> float:
    """N^2 (nm^-3) from quadrature of the radial probability weight."""
    ri = quadrature_integrals(geometry, l, zeta, xi, kappa, quad_cfg)
    return 1.0 / (2.0 * math.pi * geometry.half_height_d * ri.norm_total)


def normalization_closed_form(geometry: CavityGeometry, l: int, zeta: float, xi: float,
                              kappa: float) -> float:
    ri = closed_form_integrals(l, zeta, xi, kappa, geometry.radius_R)
    return 1.0 / (2.0 * math.pi * geometry.half_height_d * ri.norm_total)


def total_charge(state: EigenState, quad_cfg: QuadratureConfig | None = None) -> float:
    """Integrate q over regions I and II; equals 1 (in units of e) for a normalized state.

    The z integral is done numerically too, so the result does not lean on
    the int cos^2 = d shortcut used by :func:`normalization`.
    """
    g = state.geometry
    xi = state.xi
    radial_in = integrate(lambda r: float(charge_density(state, r, 0.0)) * r, 0.0, g.radius_R, quad_cfg).value
    radial_out = integrate_tail(lambda r: float(charge_density(state, r, 0.0)) * r,
                                g.radius_R, 2 * xi, quad_cfg).value
    axial = integrate(lambda z: math.cos(state.k_axial * z) ** 2,
                      -g.half_height_d, g.half_height_d, quad_cfg).value
    return 2.0 * math.pi * axial * (radial_in + radial_out)
