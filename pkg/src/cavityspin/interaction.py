"""First-order interaction of a cavity eigenstate with a uniform axial magnetic field.

The field B z-hat is described by A_phi = B rho / 2. Two pictures are compared:

* wave picture: the energy is the volume integral of j_phi A_phi;
* particle picture: a magnetic moment mu_B carried with the probability density.

Both reduce to mu_B B times a ratio of radial integrals. Regional splits keep
the full-space denominator and restrict the numerator to region I or II.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict

from .constants import constants
from .fields import quadrature_integrals
from .integrals import RadialIntegrals, closed_form_integrals
from .model import EigenState, RegionMask
from .quadrature import QuadratureConfig

PUBLISHED_FRACTIONS = {
    "wave_fraction_I": 0.71,
    "wave_fraction_II": 0.29,
    "particle_fraction_I": 0.85,
    "particle_fraction_II": 0.15,
}


def vector_potential(b_field, rho):
    """A_phi (T nm) of a uniform field ``b_field`` along z."""
    return 0.5 * b_field * rho


def radial_integrals(state: EigenState, quad_cfg: QuadratureConfig | None = None,
                     method: str = "quadrature") -> RadialIntegrals:
    if method == "quadrature":
        return quadrature_integrals(state.geometry, state.l, state.zeta, state.xi, state.kappa, quad_cfg)
    if method == "closed":
        return closed_form_integrals(state.l, state.zeta, state.xi, state.kappa, state.geometry.radius_R)
    raise ValueError(f"unknown method {method!r}")


def _masked(ri: RadialIntegrals, mask: RegionMask, wave: bool) -> float:
    inside, outside = (ri.wave_I, ri.wave_II) if wave else (ri.norm_I, ri.norm_II)
    if mask is RegionMask.REGION_I:
        return inside
    if mask is RegionMask.REGION_II:
        return outside
    return inside + outside


def interaction_wave(state: EigenState, b_field: float, mask: RegionMask = RegionMask.ALL,
                     quad_cfg: QuadratureConfig | None = None, method: str = "quadrature",
                     integrals: RadialIntegrals | None = None) -> float:
    """Signed integral of j_phi A_phi over the masked regions, in eV.

    The electron's azimuthal current is negative in the ground state, so the
    signed value is -mu_B B there; the physical magnitude is its absolute value.
    """
    ri = integrals or radial_integrals(state, quad_cfg, method)
    return constants().bohr_magneton * b_field * _masked(ri, mask, wave=True) / ri.norm_total


def interaction_particle(state: EigenState, b_field: float, mask: RegionMask = RegionMask.ALL,
                         quad_cfg: QuadratureConfig | None = None, method: str = "quadrature",
                         integrals: RadialIntegrals | None = None) -> float:
    """mu_B B times the probability weight of the masked regions, in eV."""
    ri = integrals or radial_integrals(state, quad_cfg, method)
    return constants().bohr_magneton * b_field * _masked(ri, mask, wave=False) / ri.norm_total


def unity_ratio(state: EigenState, quad_cfg: QuadratureConfig | None = None,
                method: str = "quadrature") -> float:
    """|current moment| / probability weight.

    Equals 1 for l = 0 whenever the large component is continuous at R. For
    l > 0 the current also carries the orbital moment and the ratio is 1 + l.
    """
    ri = radial_integrals(state, quad_cfg, method)
    return abs(ri.wave_total) / ri.norm_total


@dataclass(frozen=True)
class InteractionReport:
    b_field: float
    wave_total: float
    wave_region_I: float
    wave_region_II: float
    particle_total: float
    particle_region_I: float
    particle_region_II: float
    wave_fraction_I: float
    wave_fraction_II: float
    particle_fraction_I: float
    particle_fraction_II: float
    unity_ratio: float
    wave_total_signed: float

    def as_dict(self) -> dict:
        return asdict(self)


def _report_from(ri: RadialIntegrals, b_field: float) -> InteractionReport:
    mu_b = constants().bohr_magneton
    d = ri.norm_total
    w_sign = math.copysign(1.0, ri.wave_total)
    w_i, w_ii = w_sign * ri.wave_I / d, w_sign * ri.wave_II / d
    p_i, p_ii = ri.norm_I / d, ri.norm_II / d
    w_tot = w_i + w_ii
    return InteractionReport(
        b_field=b_field,
        wave_total=mu_b * b_field * w_tot,
        wave_region_I=mu_b * b_field * w_i,
        wave_region_II=mu_b * b_field * w_ii,
        particle_total=mu_b * b_field * (p_i + p_ii),
        particle_region_I=mu_b * b_field * p_i,
        particle_region_II=mu_b * b_field * p_ii,
        wave_fraction_I=w_i / w_tot,
        wave_fraction_II=w_ii / w_tot,
        particle_fraction_I=p_i / (p_i + p_ii),
        particle_fraction_II=p_ii / (p_i + p_ii),
        unity_ratio=w_tot,
        wave_total_signed=mu_b * b_field * ri.wave_total / d,
    )


def interaction_report(state: EigenState, b_field: float,
                       quad_cfg: QuadratureConfig | None = None,
                       method: str = "quadrature") -> InteractionReport:
    """Totals, regional energies and fractions for both pictures.

    Energies are magnitudes (the wave picture's sign is folded out and kept
    in ``wave_total_signed``); fractions are relative to each picture's total.
    """
    return _report_from(radial_integrals(state, quad_cfg, method), b_field)


def published_comparison(report: InteractionReport) -> dict[str, dict[str, float]]:
    """Published ground-state regional fractions next to the computed ones."""
    out = {}
    for key, printed in PUBLISHED_FRACTIONS.items():
        computed = getattr(report, key)
        out[key] = {"printed": printed, "computed": computed, "abs_diff": abs(computed - printed)}
    return out
