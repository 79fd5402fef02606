import os
import numpy as np
from casmodes import *

os.makedirs('data', exist_ok = True)

quad = QuadratureConfig(rel_tol = 1e-6)

for gamma in [1e-3, 1e-2, 1e-1]:
	rows = []
	for tL in np.geomspace(0.5, 20, 12):
		m, geometry, temp = classical_regime(gamma_ratio = gamma, tL = tL)
		eddy = eddy_free_energy_highT(Polarization.TE, geometry, m, temp, quad)
		plasma = plasma_highT_TE_reference(geometry, m, temp, quad)
		drude = free_energy_T(geometry, m, temp, quad)
		print(f"gamma {gamma:g} tL {tL:6.3f} ratio {-eddy.value/plasma:8.5f}")
		rows.append([tL, -eddy.value/plasma, drude.te/abs(eddy.value)])

	np.savetxt(f'data/fig_cancellation_gamma_{gamma:g}.dat', np.array(rows),
		header = 'tL ratio drude_te_over_eddy', comments = '')
