"""Three engines on the same small problem.

The exact engine propagates the full state; the grouped MPS merges each column
into one site and truncates bonds between columns; the PEPS keeps one tensor
per site and uses simple updates. On a 3x2 lattice with generous bond
dimensions all three agree closely, and the tensor-network fidelity shows how
much weight truncation has discarded.
"""

import numpy as np

from rmdsim.exact import evolve_exact
from rmdsim.gmps import evolve_gmps, init_gmps
from rmdsim.lattice import DriveParams, build_lattice, density_wave_state
from rmdsim.peps import evolve_peps, init_peps
from rmdsim.sequence import generate_sequence

lattice = build_lattice(3, 2)
params = DriveParams(T=5.0, n=1)
seq = generate_sequence(1, 20, seed=3)
psi0 = density_wave_state(lattice)

exact = evolve_exact(psi0, seq, params)
gmps = evolve_gmps(init_gmps(psi0, 8), seq, params)
peps = evolve_peps(init_peps(psi0, chi_peps=4), seq, params)

print(" t [ns]   exact    gmps    peps")
for k in range(0, len(exact.times), 5):
    print(f"{exact.times[k]:7.0f}  {exact.imbalance[k]:+.4f} {gmps.imbalance[k]:+.4f} {peps.imbalance[k]:+.4f}")
print(f"\nmax |gmps - exact| = {np.max(np.abs(gmps.imbalance - exact.imbalance)):.1e} (Trotter error only)")
print(f"max |peps - exact| = {np.max(np.abs(peps.imbalance - exact.imbalance)):.1e}")
print(f"final fidelity: gmps {gmps.fidelity[-1]:.4f}, peps {peps.fidelity[-1]:.4f}")
