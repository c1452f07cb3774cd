"""
The ground state of an electron in a cylindrical cavity
=======================================================

A cylinder of radius 8 nm and half-height 4 nm holds a 10 meV radial barrier.
The axial walls are impenetrable, so the axial wave number is fixed and only
the radial matching condition has to be solved.
"""

from cavityspin import CavityGeometry, QuantumNumbers, solve_eigenstate
from cavityspin.constants import wavevector_to_si
from cavityspin.fields import total_charge

geometry = CavityGeometry.from_nm_mev(radius_nm=8.0, half_height_nm=4.0, potential_mev=10.0)
state = solve_eigenstate(geometry, QuantumNumbers(n_radial=1, l_azimuthal=0, m_axial=1))

# Energies are kept in eV internally; the kinetic energy above the rest mass
# lands a little below the barrier.
print(f"epsilon      = {state.epsilon * 1e3:.4f} meV")

# Inside the cavity the radial solution oscillates with zeta, outside it decays
# with xi. Both are stored per nanometre.
print(f"zeta         = {wavevector_to_si(state.zeta):.4e} 1/m")
print(f"xi           = {wavevector_to_si(state.xi):.4e} 1/m")

# kappa couples the two radial pieces so that the large component is continuous.
print(f"kappa        = {state.kappa:.4f}")
print(f"N^2          = {state.n_squared:.6e} 1/nm^3")

# The normalization is checked by integrating the charge over all space.
print(f"total charge = {total_charge(state):.12f} e")
