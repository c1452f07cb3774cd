"""Value types shared by the solver, field and interaction code."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .constants import constants


class Region(enum.Enum):
    I = "I"  # inside the cavity, rho < R, |z| < d
    II = "II"  # radially outside the barrier wall, rho >= R, |z| < d
    III = "III"  # beyond the infinite axial walls; wavefunction is zero


class RegionMask(enum.Enum):
    REGION_I = "I"
    REGION_II = "II"
    ALL = "all"

    def includes(self, region: Region) -> bool:
        if region is Region.III:
            return False
        return self is RegionMask.ALL or self.value == region.value


@dataclass(frozen=True)
class CavityGeometry:
    """Cylindrical cavity of radius R and height 2d with a radial barrier U.

    Lengths are in nm and the barrier in eV.
    """

    radius_R: float
    half_height_d: float
    barrier_U: float

    def __post_init__(self):
        for name in ("radius_R", "half_height_d", "barrier_U"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be finite and > 0, got {v!r}")

    @classmethod
    def from_nm_mev(cls, radius_nm, half_height_nm, potential_mev):
        return cls(float(radius_nm), float(half_height_nm), potential_mev * 1e-3)


@dataclass(frozen=True)
class QuantumNumbers:
    n_radial: int = 1
    l_azimuthal: int = 0
    m_axial: int = 1
    spin_up: bool = True

    def __post_init__(self):
        if self.n_radial < 1:
            raise ValueError("n must be >= 1")
        if self.l_azimuthal < 0:
            raise ValueError("l must be >= 0")
        if self.m_axial < 1 or self.m_axial % 2 == 0:
            raise ValueError("m must be odd and >= 1")
        if not self.spin_up:
            raise NotImplementedError("only spin-up states are supported")


@dataclass(frozen=True)
class EigenState:
    """A solved cavity eigenstate.

    ``epsilon`` is the energy above the electron rest energy (eV), wave
    numbers are in nm^-1 and ``n_squared`` in nm^-3. ``xi`` is the positive
    decay constant of the exterior K_l solution. ``kappa`` is the signed
    amplitude ratio J_l(zeta R)/K_l(xi R); it is negative for some excited
    radial states.
    """

    geometry: CavityGeometry
    qnums: QuantumNumbers
    epsilon: float
    k_axial: float
    zeta: float
    xi: float
    kappa: float
    n_squared: float
    boundary_residual: float = 0.0

    def __post_init__(self):
        if not (self.zeta > 0 and self.xi > 0 and self.n_squared > 0):
            raise ValueError("zeta, xi and n_squared must be > 0")
        if self.kappa == 0 or not math.isfinite(self.kappa):
            raise ValueError("kappa must be finite and nonzero")
        k = self.qnums.m_axial * math.pi / (2.0 * self.geometry.half_height_d)
        if not math.isclose(self.k_axial, k, rel_tol=1e-15):
            raise ValueError("k_axial inconsistent with m and d")

    @property
    def l(self) -> int:
        return self.qnums.l_azimuthal

    @property
    def eta_inside(self) -> float:
        """hbar c / (E + m c^2) for region I."""
        c = constants()
        return c.hbar_c / (2.0 * c.electron_rest_energy + self.epsilon)

    @property
    def eta_outside(self) -> float:
        """hbar c / (E - U + m c^2) for region II."""
        c = constants()
        return c.hbar_c / (2.0 * c.electron_rest_energy + self.epsilon - self.geometry.barrier_U)


def classify_point(geometry: CavityGeometry, rho: float, z: float) -> Region:
    if rho < 0:
        raise ValueError("rho must be >= 0")
    if abs(z) >= geometry.half_height_d:
        return Region.III
    return Region.I if rho < geometry.radius_R else Region.II
