"""
Where the circulating current lives
===================================

The azimuthal current j_phi vanishes on the axis, peaks a little more than
halfway to the wall and leaks into the barrier as an evanescent tail. The set
of points where |j_phi| exceeds two thirds of its peak is a ring torus. Here
we check that this torus sits entirely inside the cavity.
"""

import numpy as np

from cavityspin import CavityGeometry, QuantumNumbers, solve_eigenstate
from cavityspin.fields import current_density
from cavityspin.grid import GridSpec, iso_statistics

geometry = CavityGeometry.from_nm_mev(8.0, 4.0, 10.0)
state = solve_eigenstate(geometry, QuantumNumbers(1, 0, 1))

# A radial cut through the mid-plane shows the shape of the current.
for rho in np.linspace(0.0, 14.0, 15):
    j = current_density(state, rho, 0.0)[1]
    bar = "#" * int(round(60 * abs(j) / abs(current_density(state, 4.53, 0.0)[1])))
    print(f"rho = {rho:5.1f} nm  {bar}")

# On a 400 x 400 grid out to twice the radius, the iso-region stays inside rho < R.
stats = iso_statistics(state, GridSpec(rho_max=16.0, n_rho=400, n_z=400))
print(f"peak |j_phi| at rho = {stats.peak_rho_nm:.3f} nm, z = {stats.peak_z_nm:.3f} nm")
print(f"2/3 level spans rho in [{stats.iso_rho_min_nm:.3f}, {stats.iso_rho_max_nm:.3f}] nm")
print(f"fraction of the torus inside the cavity = {stats.fraction_inside_region_I:.6f}")
