"""Grid sampling of the densities and iso-level statistics of the spin current torus."""

from __future__ import annotations

import enum
import io
from dataclasses import dataclass

import numpy as np

from .fields import charge_density, current_density
from .model import EigenState

FLOAT_FMT = "%.11e"  # 12 significant digits


class CoordinateMode(enum.Enum):
    CYLINDRICAL_RZ = "rz"
    CARTESIAN_XYZ = "xyz"


@dataclass(frozen=True)
class GridSpec:
    rho_max: float
    n_rho: int = 200
    n_z: int = 200
    n_phi: int = 16
    coordinate_mode: CoordinateMode = CoordinateMode.CYLINDRICAL_RZ

    def __post_init__(self):
        if min(self.n_rho, self.n_z, self.n_phi) < 2:
            raise ValueError("grid dimensions must be >= 2")
        if not self.rho_max > 0:
            raise ValueError("rho_max must be > 0")

    @property
    def n_points(self) -> int:
        n = self.n_rho * self.n_z
        return n * self.n_phi if self.coordinate_mode is CoordinateMode.CARTESIAN_XYZ else n


def rz_axes(state: EigenState, spec: GridSpec):
    d = state.geometry.half_height_d
    return np.linspace(0.0, spec.rho_max, spec.n_rho), np.linspace(-d, d, spec.n_z)


def sample_rz(state: EigenState, spec: GridSpec) -> dict[str, np.ndarray]:
    """Densities on a (rho, z) mesh; arrays have shape (n_rho, n_z)."""
    rho, z = rz_axes(state, spec)
    P, Z = np.meshgrid(rho, z, indexing="ij")
    q = charge_density(state, P, Z)
    _, j_phi, _ = current_density(state, P, Z)
    return {"rho_nm": P, "z_nm": Z, "charge_e_per_nm3": q, "jphi": j_phi, "probability": q}


@dataclass(frozen=True)
class IsoStats:
    peak_abs_jphi: float
    peak_rho_nm: float
    peak_z_nm: float
    level_fraction: float
    iso_points: int
    fraction_inside_region_I: float
    iso_rho_min_nm: float
    iso_rho_max_nm: float


def iso_statistics(state: EigenState, spec: GridSpec, level_fraction: float = 2.0 / 3.0) -> IsoStats:
    """Peak of |j_phi| and the share of the ``level_fraction``-of-peak region inside rho < R."""
    s = sample_rz(state, spec)
    a = np.abs(s["jphi"])
    idx = np.unravel_index(np.argmax(a), a.shape)
    peak = float(a[idx])
    iso = a >= level_fraction * peak
    rho_iso = s["rho_nm"][iso]
    inside = np.count_nonzero(rho_iso < state.geometry.radius_R)
    return IsoStats(
        peak_abs_jphi=peak,
        peak_rho_nm=float(s["rho_nm"][idx]),
        peak_z_nm=float(s["z_nm"][idx]),
        level_fraction=level_fraction,
        iso_points=int(iso.sum()),
        fraction_inside_region_I=inside / rho_iso.size,
        iso_rho_min_nm=float(rho_iso.min()),
        iso_rho_max_nm=float(rho_iso.max()),
    )


def grid_table(state: EigenState, spec: GridSpec) -> tuple[list[str], np.ndarray]:
    """Column names and a row-major table for CSV export."""
    if spec.coordinate_mode is CoordinateMode.CYLINDRICAL_RZ:
        s = sample_rz(state, spec)
        cols = ["rho_nm", "z_nm", "charge_e_per_nm3", "jphi", "probability"]
        return cols, np.column_stack([s[c].ravel() for c in cols])
    rho, z = rz_axes(state, spec)
    phi = np.linspace(0.0, 2 * np.pi, spec.n_phi, endpoint=False)
    P, F, Z = np.meshgrid(rho, phi, z, indexing="ij")
    q = charge_density(state, P, Z)
    _, j_phi, _ = current_density(state, P, Z)
    cols = ["x_nm", "y_nm", "z_nm", "charge_e_per_nm3", "jphi", "jx", "jy", "probability"]
    data = [P * np.cos(F), P * np.sin(F), Z, q, j_phi, -j_phi * np.sin(F), j_phi * np.cos(F), q]
    return cols, np.column_stack([c.ravel() for c in data])


def to_csv(columns: list[str], table: np.ndarray) -> str:
    buf = io.StringIO()
    np.savetxt(buf, table, fmt=FLOAT_FMT, delimiter=",", header=",".join(columns),
               comments="", newline="\n")
    return buf.getvalue()
