"""Physical constants and the few unit conversions the package needs.

Internal units: energy in eV, length in nm, charge in elementary charges,
magnetic flux density in tesla. Values are CODATA 2018.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

NM_PER_M = 1e9


@dataclass(frozen=True)
class PhysicalConstants:
    hbar_c: float  # eV nm
    electron_rest_energy: float  # eV
    bohr_magneton: float  # eV / T
    elementary_charge_coulomb: float  # C
    speed_of_light: float  # m / s

    @property
    def eta(self) -> float:
        """Small-component scale hbar/(2 m c) in nm."""
        return self.hbar_c / (2.0 * self.electron_rest_energy)


@lru_cache(maxsize=None)
def constants() -> PhysicalConstants:
    return PhysicalConstants(
        hbar_c=197.3269804,
        electron_rest_energy=510998.95,
        bohr_magneton=5.7883818060e-5,
        elementary_charge_coulomb=1.602176634e-19,
        speed_of_light=299792458.0,
    )


def wavevector_to_si(k):
    """Convert a wave number from nm^-1 to m^-1."""
    return k * NM_PER_M


def charge_density_to_si(q):
    """Convert e nm^-3 to C m^-3."""
    return q * constants().elementary_charge_coulomb * NM_PER_M**3


def current_density_to_si(j):
    """Convert e c nm^-3 to A m^-2."""
    c = constants()
    return j * c.elementary_charge_coulomb * c.speed_of_light * NM_PER_M**3
