"""Closed-form radial integrals of products of cylinder functions.

These give an analytic second route to every radial integral the package
evaluates by quadrature. With X = zeta R and Y = xi R:

    int_0^R   J_l(zeta r)^2 r dr = R^2/2 [J_l(X)^2 - J_{l-1}(X) J_{l+1}(X)]
    int_R^inf K_l(xi r)^2 r dr   = R^2/2 [K_{l-1}(Y) K_{l+1}(Y) - K_l(Y)^2]

and, integrating u u' r^2 by parts, the azimuthal-current moments

    int_0^R   J_l (zeta J_l' - l J_l / r) r^2 dr = R^2 J_l(X)^2 / 2 - (1 + l) int_0^R J_l^2 r dr
    int_R^inf K_l (xi K_l' - l K_l / r) r^2 dr  = -R^2 K_l(Y)^2 / 2 - (1 + l) int_R^inf K_l^2 r dr

with J_{-1} = -J_1 and K_{-1} = K_1.
"""

from __future__ import annotations

from typing import NamedTuple

from .specfun import bessel_j, bessel_k


def _jm(l, x):
    return -bessel_j(1, x) if l == 0 else bessel_j(l - 1, x)


def _km(l, x):
    return bessel_k(1, x) if l == 0 else bessel_k(l - 1, x)


def j_norm_integral(l: int, zeta: float, R: float) -> float:
    X = zeta * R
    return 0.5 * R * R * (bessel_j(l, X) ** 2 - _jm(l, X) * bessel_j(l + 1, X))


def k_norm_integral(l: int, xi: float, R: float) -> float:
    Y = xi * R
    return 0.5 * R * R * (_km(l, Y) * bessel_k(l + 1, Y) - bessel_k(l, Y) ** 2)


def j_current_moment(l: int, zeta: float, R: float) -> float:
    X = zeta * R
    return 0.5 * R * R * bessel_j(l, X) ** 2 - (1 + l) * j_norm_integral(l, zeta, R)


def k_current_moment(l: int, xi: float, R: float) -> float:
    Y = xi * R
    return -0.5 * R * R * bessel_k(l, Y) ** 2 - (1 + l) * k_norm_integral(l, xi, R)


class RadialIntegrals(NamedTuple):
    """Radial weights of a state, region by region, with kappa^2 applied to region II.

    ``norm_*`` are probability weights int u^2 r dr; ``wave_*`` are the signed
    current moments int u F r^2 dr, where F is the small-component radial factor.
    """

    norm_I: float
    norm_II: float
    wave_I: float
    wave_II: float

    @property
    def norm_total(self) -> float:
        return self.norm_I + self.norm_II

    @property
    def wave_total(self) -> float:
        return self.wave_I + self.wave_II


def closed_form_integrals(l: int, zeta: float, xi: float, kappa: float, R: float) -> RadialIntegrals:
    k2 = kappa * kappa
    return RadialIntegrals(
        norm_I=j_norm_integral(l, zeta, R),
        norm_II=k2 * k_norm_integral(l, xi, R),
        wave_I=j_current_moment(l, zeta, R),
        wave_II=k2 * k_current_moment(l, xi, R),
    )
