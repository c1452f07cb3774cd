"""Relativistic electron states, four-current and spin-field interaction in a cylindrical cavity."""

from .constants import PhysicalConstants, constants, wavevector_to_si
from .model import CavityGeometry, EigenState, QuantumNumbers, Region, RegionMask, classify_point
from .quadrature import QuadratureConfig
from .solver import (
    BoundStateError,
    NoBoundStateError,
    RadialIndexError,
    SolverConfig,
    bound_window,
    boundary_residual,
    find_all_states,
    solve_eigenstate,
    wave_numbers,
)
from .fields import bispinor_at, charge_density, current_density, current_density_oracle
from .interaction import InteractionReport, interaction_particle, interaction_report, interaction_wave, unity_ratio

__version__ = "0.1.0"
