import numpy as np
import pytest
from casmodes import *
try:
	from test_data import random_imaginary_frequencies
except ImportError:
	from .test_data import random_imaginary_frequencies


def test_isolated_interface():
	m = MaterialParams.plasma(1.)
	pair = quasistatic_frequencies(1., np.inf, m)
	assert np.isclose(pair.omega_plus.value, 1/np.sqrt(2))
	assert np.isclose(pair.omega_minus.value, 1/np.sqrt(2))
	pair = quasistatic_frequencies(50., 1., m)
	assert np.isclose(pair.omega_plus.value.real, 1/np.sqrt(2), rtol = 1e-10)


@pytest.mark.parametrize("k, L", [(1e-3, 1.), (0.7, 0.3), (20., 5.)])
def test_lossless_real(k, L):
	pair = quasistatic_frequencies(k, L, MaterialParams.plasma(1.))
	for w in pair.modes():
		assert w.value.imag == 0
		assert not w.purely_imaginary
	assert np.isclose(pair.omega_plus.value**2, 0.5*(1 + np.exp(-k*L)))
	assert np.isclose(pair.omega_minus.value**2, 0.5*(1 - np.exp(-k*L)))


def test_damped_example():
	m = MaterialParams.drude(1., 0.1)
	pair = quasistatic_frequencies(np.log(2.), Geometry(1.), m)
	expected = np.sqrt(0.75 - 0.0025) - 0.05j
	print(pair.omega_plus.value, expected)
	assert np.isclose(pair.omega_plus.value, expected, rtol = 1e-14)
	assert not pair.overdamped_minus
	assert len(pair.modes()) == 2


def test_overdamped():
	m = MaterialParams.drude(1., 0.1)
	pair = quasistatic_frequencies(1e-6, 1., m)
	assert pair.overdamped_minus
	assert not pair.overdamped_plus
	fast, slow = pair.omega_minus, pair.omega_minus_partner
	assert fast.purely_imaginary and slow.purely_imaginary
	assert fast.weight == slow.weight == 0.5
	# the roots sum to -i gamma and multiply to -omega_-^2
	assert np.isclose(fast.value + slow.value, -0.1j)
	assert np.isclose(fast.value*slow.value, -0.5*(-np.expm1(-1e-6)), rtol = 1e-12)


def test_overdamped_plus():
	# gamma^2/4 above omega_p^2/2 overdamps the isolated interface as well
	m = MaterialParams.drude(1., 1.8)
	pair = quasistatic_frequencies(1., np.inf, m)
	assert pair.overdamped_plus and pair.overdamped_minus
	assert len(pair.modes()) == 4


def test_domain():
	m = MaterialParams.drude(1., 0.1)
	with pytest.raises(DomainError):
		quasistatic_frequencies(0., 1., m)
	with pytest.raises(DomainError):
		quasistatic_frequencies(-1., 1., m)


def test_mode_term_examples():
	cutoff = CutoffLambda(1.)
	assert np.isclose(mode_term(ComplexFrequency(1.), cutoff), 0.5)
	assert mode_term(ComplexFrequency(-1j), cutoff) == 0
	val = mode_term(ComplexFrequency(-0.1j), cutoff)
	assert np.isclose(val, 0.03665, atol = 1e-5)
	assert abs(val + 0.1/(2*np.pi)*np.log(0.1)) < 1e-14
	with pytest.raises(DomainError):
		mode_term(ComplexFrequency(0.), cutoff)


def test_mode_term_imaginary_closed_form():
	xi, lam = random_imaginary_frequencies(1000)
	worst = 0.
	for x, l in zip(xi, lam):
		val = mode_term(ComplexFrequency(-1j*x), CutoffLambda(l))
		closed = -x/(2*np.pi)*np.log(x/l)
		scale = max(1., abs(closed))
		worst = max(worst, abs(val - closed)/scale)
	print("largest deviation", worst)
	assert worst < 1e-14


def test_sum_rule_lossless():
	assert sum_rule_residual(0.3, Geometry(2.), MaterialParams.plasma(1.)) == 0


@pytest.mark.parametrize("k, L, gamma", [
	(1e-6, 1., 0.1),
	(0.5, 1., 0.1),
	(3., 0.01, 1.3),
	(0.01, 10., 1.9),
	])
def test_sum_rule(k, L, gamma):
	res = sum_rule_residual(k, Geometry(L), MaterialParams.drude(1., gamma))
	print(res)
	assert abs(res) < 1e-13


def test_sum_rule_random():
	samples = plasmon_samples(100, seed = 3)
	assert any(quasistatic_frequencies(k, g, m).overdamped_minus for k, g, m in samples)
	worst = max(abs(sum_rule_residual(k, g, m)) for k, g, m in samples)
	assert worst < 1e-13


def test_overdamping_threshold():
	m = MaterialParams.drude(1., 0.1)
	geometry = Geometry(2.)
	k_star = overdamping_threshold(geometry, m)
	omega2_minus = 0.5*(1 - np.exp(-k_star*geometry.L))
	assert np.isclose(omega2_minus, 0.25*m.gamma**2, rtol = 1e-12)
	assert overdamping_thresholds(geometry, m) == [k_star]
	assert overdamping_threshold(geometry, MaterialParams.plasma(1.)) == 0
	assert overdamping_threshold(geometry, MaterialParams.drude(1., 1.5)) == np.inf
	assert len(overdamping_thresholds(geometry, MaterialParams.drude(1., 1.8))) == 1


def test_integrand_continuity():
	m = MaterialParams.drude(1., 0.1)
	geometry = Geometry(1.)
	cutoff = CutoffLambda(1.)
	k_star = overdamping_threshold(geometry, m)
	k = k_star*np.array([1 - 1e-9, 1 + 1e-9])
	f = plasmon_integrand(k, geometry, m, cutoff)
	print(f)
	assert abs(f[1] - f[0]) < 1e-6*abs(f[0])


def test_integrand_matches_mode_terms():
	m = MaterialParams.drude(1., 0.3)
	geometry = Geometry(0.5)
	cutoff = CutoffLambda(2.)
	for k in [1e-3, 0.1, 2.]:
		at_L = quasistatic_frequencies(k, geometry, m)
		at_inf = quasistatic_frequencies(k, np.inf, m)
		bracket = sum(mode_term(w, cutoff) for w in at_L.modes()) - sum(mode_term(w, cutoff) for w in at_inf.modes())
		assert np.isclose(plasmon_integrand(np.array([k]), geometry, m, cutoff)[0], k/(2*np.pi)*bracket, rtol = 1e-12)


@pytest.mark.parametrize("gamma", [0., 0.005, 0.01])
def test_short_distance(gamma):
	m, geometry = short_distance(gamma_ratio = gamma, ratio = 0.01)
	value = plasmon_energy(geometry, m, CutoffLambda(1.))
	asym = plasmon_energy_asymptotic(geometry, m)
	print(gamma, value, asym, value/asym)
	assert abs(value/asym - 1) < 0.02
	assert value < 0


def test_short_distance_eta():
	m, geometry = short_distance(ratio = 0.01)
	eta = reduction_factor(plasmon_energy(geometry, m, CutoffLambda(1.)), geometry)
	assert abs(eta/0.0179 - 1) < 0.02


def test_dissipative_shift():
	m0, geometry = short_distance(0., 0.01)
	m1 = MaterialParams.drude(1., 0.01)
	cutoff = CutoffLambda(1.)
	shift = plasmon_energy(geometry, m1, cutoff) - plasmon_energy(geometry, m0, cutoff)
	expected = plasmon_energy_asymptotic(geometry, m1) - plasmon_energy_asymptotic(geometry, m0)
	print(shift, expected)
	assert expected > 0
	assert abs(shift - expected) < 0.1*abs(expected)


@pytest.mark.parametrize("ratio, gamma", [(0.01, 0.), (0.01, 0.01), (0.1, 0.), (0.1, 0.01)])
def test_lambda_independence(ratio, gamma):
	m, geometry = short_distance(gamma, ratio)
	values = [plasmon_energy(geometry, m, CutoffLambda(lam)) for lam in (max(gamma, 1e-3), 1., 2., 100.)]
	print(values)
	for v in values[1:]:
		assert abs(v/values[0] - 1) < 1e-6


def test_large_distance_finite():
	m, geometry = short_distance(0., 10.)
	value, err = plasmon_energy(geometry, m, CutoffLambda(1.), full_output = True)
	assert np.isfinite(value) and np.isfinite(err)


def test_asymptotic_form():
	m, geometry = short_distance(0., 0.01)
	L = 0.01*2*np.pi
	expected = -np.pi**2/(720*L**3)*1.5*1.193*0.01
	assert np.isclose(plasmon_energy_asymptotic(geometry, m), expected, rtol = 1e-14)
	damped = MaterialParams.drude(1., 0.01)
	assert plasmon_energy_asymptotic(geometry, damped) > plasmon_energy_asymptotic(geometry, m)


if __name__ == '__main__':
	test_short_distance(0.005)
