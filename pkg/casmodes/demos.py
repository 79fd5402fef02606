r""" Canonical parameter sets used by the built-in checks, the CLI and the tests
"""

import numpy as np

from .params import MaterialParams, Geometry, Temperature, Units

__all__ = [
	'GOLD_OMEGA_P',
	'gold_like',
	'short_distance',
	'classical_regime',
	'perfect_mirror',
	'plasmon_samples',
	]

# Plasma frequency of gold in rad/s
GOLD_OMEGA_P = 1.37e16


def gold_like(gamma_ratio = 1e-3):
	r""" Stylized gold: Drude metal with :math:`\gamma = 10^{-3}\omega_p`

	Returns
	-------
	m: MaterialParams
		Material in internal units
	units: Units
		Conversion to SI for the plasma frequency of gold
	"""
	return MaterialParams.drude(1., gamma_ratio), Units(GOLD_OMEGA_P)


def short_distance(gamma_ratio = 0., ratio = 0.01):
	r""" Separation much smaller than the plasma wavelength, where plasmons dominate

	Returns
	-------
	m: MaterialParams
	geometry: Geometry
	"""
	m = MaterialParams.drude(1., gamma_ratio)
	return m, Geometry.from_ratio(ratio, m)


def classical_regime(gamma_ratio = 1e-3, ratio = 10., tL = 5.):
	r""" Large separation and high temperature, :math:`k_BT L/\hbar c \ge 5`

	Returns
	-------
	m: MaterialParams
	geometry: Geometry
	temp: Temperature
	"""
	m = MaterialParams.drude(1., gamma_ratio)
	geometry = Geometry.from_ratio(ratio, m)
	return m, geometry, Temperature(tL/geometry.L)


def perfect_mirror(omega_p_L = 1e4):
	r""" Lossless mirrors with :math:`\omega_p L \gg c`

	Returns
	-------
	m: MaterialParams
	geometry: Geometry
	"""
	return MaterialParams.plasma(omega_p_L), Geometry(1.)


def plasmon_samples(n, seed = 0):
	r""" Random (k, geometry, material) triples for the plasmon sum rule

	Damping rates extend to :math:`\gamma = 2\omega_p` so that both branches, and the
	isolated-interface reference, can be overdamped; the first sample is deep in the
	overdamped regime (:math:`kL = 10^{-6}`, :math:`\gamma = 0.1`).

	Returns
	-------
	list of tuple
		(k, Geometry, MaterialParams)
	"""
	rng = np.random.default_rng(seed)
	samples = [(1e-6, Geometry(1.), MaterialParams.drude(1., 0.1))]
	while len(samples) < n:
		k = 10**rng.uniform(-4, 2)
		L = 10**rng.uniform(-3, 2)
		gamma = rng.uniform(0, 2) if rng.uniform() < 0.8 else 0.
		samples.append((k, Geometry(L), MaterialParams.drude(1., gamma)))
	return samples
