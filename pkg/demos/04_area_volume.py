"""Entanglement goes from area law to volume law on a 4x4 lattice.

Subsystem entropies are fitted to S = s_A * A + s_V * V, with A the number of
cut bonds and V the number of sites. Early on the boundary term dominates;
after heating the volume term takes over. A few seconds.
"""

import numpy as np

from rmdsim.analysis import fit_area_volume
from rmdsim.lattice import DriveParams, build_lattice, density_wave_state
from rmdsim.observables import as_subsystem, subsystem_geometry
from rmdsim.sequence import sequence_for_horizon
from rmdsim.trotter import evolve_trotter

lattice = build_lattice(4, 4)
params = DriveParams(T=4.0, n=1)
shapes = {
    "corner": [(1, 1)], "edge": [(2, 1)], "bulk": [(2, 2)], "pair": [(2, 2), (3, 2)],
    "column": [(1, 1), (1, 2), (1, 3), (1, 4)], "corner_block": [(1, 1), (2, 1), (1, 2), (2, 2)],
    "centre_block": [(2, 2), (3, 2), (2, 3), (3, 3)], "ell": [(2, 2), (3, 2), (2, 3)],
}
subs = [as_subsystem(v, k) for k, v in shapes.items()]
times = np.array([0.0, 8.0, 40.0, 200.0])
traces = [evolve_trotter(density_wave_state(lattice), sequence_for_horizon(1, 50, s), params, 3.0, times,
                         ("imbalance", *subs)) for s in range(4)]

for i, t in enumerate(times[1:], start=1):
    records = [(*subsystem_geometry(s, lattice), np.mean([tr.entropies[s.label][i] for tr in traces])) for s in subs]
    fit = fit_area_volume(records)
    print(f"t = {t:5.0f} ns: s_A = {fit['s_A']:+.3f}, s_V = {fit['s_V']:+.3f}, s_V/s_A = {fit['ratio']:+.2f}")
