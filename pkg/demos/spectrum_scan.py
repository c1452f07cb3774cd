"""
Scanning the matching residual
==============================

Bound states sit at sign changes of the normalized matching residual inside
the window between the bare axial energy and that energy plus the barrier.
Deepening the barrier lets more radial states in.
"""

import numpy as np

from cavityspin import CavityGeometry
from cavityspin.solver import bound_window, find_all_states, scan_residual

for barrier_mev in (0.001, 10.0, 100.0):
    geometry = CavityGeometry.from_nm_mev(8.0, 4.0, barrier_mev)
    lo, hi = bound_window(geometry, m_axial=1)
    eps, residual = scan_residual(geometry, l=0, m_axial=1)
    changes = np.count_nonzero(np.diff(np.sign(residual)))
    print(f"U = {barrier_mev:7.3f} meV  window ({lo * 1e3:.4f}, {hi * 1e3:.4f}) meV  sign changes {changes}")
    # A very shallow well still binds in principle, but the binding energy is far
    # below double precision at this energy scale, so the scan finds nothing.
    for state in find_all_states(geometry, l=0, m_axial=1):
        print(f"    n = {state.qnums.n_radial}  epsilon = {state.epsilon * 1e3:9.4f} meV  kappa = {state.kappa:+.4f}")
