import os
import numpy as np
from casmodes import *

os.makedirs('data', exist_ok = True)

quad = QuadratureConfig(rel_tol = 1e-7)
ratios = np.geomspace(1e-3, 10, 25)

for gamma in [0., 1e-3, 1e-2]:
	m = MaterialParams.drude(1., gamma)
	cutoff = CutoffLambda(10*gamma if gamma > 0 else 1.)
	rows = []
	for ratio in ratios:
		geometry = Geometry.from_ratio(ratio, m)
		b = decompose(geometry, m, cutoff, quad = quad)
		print(f"gamma {gamma:g} L/lambda_p {ratio:8.3e} eta {b.lifshitz.eta:10.6f} plasmon {b.eta(b.plasmon):10.6f}")
		rows.append([ratio, b.lifshitz.eta, b.eta(b.plasmon), b.eta(b.plasmon_asymptotic),
			b.eta(b.eddy_te.value), b.eta(b.eddy_tm.value), b.eta(b.remainder)])

	np.savetxt(f'data/fig_eta_gamma_{gamma:g}.dat', np.array(rows),
		header = 'ratio total plasmon asymptotic eddy_te eddy_tm remainder', comments = '')
