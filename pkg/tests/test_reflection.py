import numpy as np
import pytest
from casmodes import *
try:
	from test_data import cut_grid
except ImportError:
	from .test_data import cut_grid


def test_epsilon():
	assert np.isclose(epsilon(1j, MaterialParams.plasma(1.)), 2.)
	eps = epsilon(-0.05j, MaterialParams.drude(1., 0.1))
	print(eps)
	assert eps.imag == 0
	assert np.isclose(eps.real, -399.)
	assert np.isclose(epsilon(1e8j, MaterialParams.drude(1., 0.1)), 1., atol = 1e-12)


@pytest.mark.parametrize("omega", [0., -0.1j])
def test_epsilon_poles(omega):
	with pytest.raises(SingularityError):
		epsilon(omega, MaterialParams.drude(1., 0.1))


@pytest.mark.parametrize("gamma", [0., 1e-3, 0.1, 2.])
def test_imaginary_axis(gamma):
	m = MaterialParams.drude(1., gamma)
	xi = np.geomspace(1e-6, 1e3, 40)
	k = np.geomspace(1e-4, 1e2, 40)[:,None]
	pt = EvaluationPoint.imaginary_axis(xi, k)
	eps = epsilon(pt.omega, m)
	assert np.all(eps.imag == 0)
	assert np.all(eps.real > 1)

	km = medium_wavenumber(pt, m)
	assert np.all(km.real == 0)
	assert np.all(km.imag > 0)

	for pol in Polarization:
		r = fresnel_r(pol, pt, m)
		assert np.all(r.imag == 0)
		assert np.all(np.abs(r) <= 1)
		lm = log_mode_function(pol, pt, 1., m)
		assert np.allclose(lm.imag, 0, atol = 1e-15)


@pytest.mark.parametrize("gamma", [1e-3, 1e-4, 1e-5])
@pytest.mark.parametrize("pol", list(Polarization))
def test_plasma_limit(gamma, pol):
	pt = EvaluationPoint.imaginary_axis(np.geomspace(0.5, 2., 9), np.geomspace(0.5, 2., 9)[:,None])
	r_drude = fresnel_r(pol, pt, MaterialParams.drude(1., gamma))
	r_plasma = fresnel_r(pol, pt, MaterialParams.plasma(1.))
	rel = np.max(np.abs(r_drude/r_plasma - 1))
	print(pol, gamma, rel)
	assert rel < 10*gamma


def test_medium_wavenumber_large_k():
	m = MaterialParams.drude(1., 0.1)
	k = 1e8
	km = medium_wavenumber(EvaluationPoint(0.3 - 0.01j, k), m)
	assert np.isclose(km, 1j*k, rtol = 1e-12)


def test_medium_wavenumber_cut():
	m = MaterialParams.drude(1., 0.1)
	k = 0.5
	xi_low, xi_high = cut_endpoints(k, m)
	xi = 0.5*(xi_low + xi_high)
	km2 = -xi**2 + xi/(m.gamma - xi) - k**2
	assert km2 > 0
	km = medium_wavenumber(EvaluationPoint.cut(xi, k), m)
	print(km, km2)
	assert km.imag == 0
	assert np.isclose(abs(km), np.sqrt(km2))
	# the left-side limit selects the negative root
	assert km.real < 0

	# on the axis below the cut the wavenumber is decaying
	km = medium_wavenumber(EvaluationPoint.cut(0.5*xi_low, k), m)
	assert km.real == 0 and km.imag > 0


def test_evaluation_point_validation():
	with pytest.raises(DomainError):
		EvaluationPoint(1j, -1.)
	with pytest.raises(DomainError):
		EvaluationPoint(0.1 - 1j, 1., BranchSide.CUT_LEFT)
	with pytest.raises(DomainError):
		EvaluationPoint.cut(-0.1, 1.)
	pt = EvaluationPoint.cut([0.1, 0.2], 1.)
	assert pt.k.shape == (2,)
	assert np.allclose(pt.xi, [0.1, 0.2])


def test_te_vanishes_at_zero_frequency():
	m = MaterialParams.drude(1., 0.1)
	r = fresnel_r(Polarization.TE, EvaluationPoint.imaginary_axis(1e-8, 1.), m)
	print(r)
	assert abs(r) < 1e-6
	assert static_reflection(Polarization.TE, 1., m) == 0
	assert static_reflection(Polarization.TM, 1., m) == 1


@pytest.mark.parametrize("k", [0.01, 0.3, 1., 10.])
def test_plasma_static_limit(k):
	m = MaterialParams.plasma(1.)
	root = np.sqrt(k**2 + 1)
	expected = (k - root)/(k + root)
	assert np.isclose(static_reflection(Polarization.TE, k, m), expected, rtol = 1e-12)
	r = fresnel_r(Polarization.TE, EvaluationPoint.imaginary_axis(1e-7, k), m)
	assert np.isclose(r, expected, rtol = 1e-6)


def test_schwarz_reflection():
	m = MaterialParams.drude(1., 0.05)
	for pol in Polarization:
		for omega in [0.3 + 0.2j, 1.4 - 0.1j, 0.05 - 0.01j]:
			r1 = fresnel_r(pol, EvaluationPoint(omega, 0.7), m)
			r2 = fresnel_r(pol, EvaluationPoint(-np.conj(omega), 0.7), m)
			assert np.isclose(r1, np.conj(r2), rtol = 1e-12)


def test_cut_endpoints_diffusive():
	m = MaterialParams.drude(1., 0.01)
	k = 1e-3
	xi_low, xi_high = cut_endpoints(k, m)
	approx = m.diffusion_constant*k**2
	print(xi_low, approx)
	assert xi_high == m.gamma
	assert abs(xi_low/approx - 1) < 0.01
	# xi_low solves -xi^2 + omega_p^2 xi/(gamma - xi) = k^2
	lhs = -xi_low**2 + xi_low/(m.gamma - xi_low)
	assert np.isclose(lhs, k**2, rtol = 1e-10)


@pytest.mark.parametrize("k", [0., 0.1, 1., 30.])
def test_cut_endpoints_bracket(k):
	m = MaterialParams.drude(1., 0.2)
	xi_low, xi_high = cut_endpoints(k, m)
	assert 0 <= xi_low < xi_high == 0.2


def test_cut_endpoints_lossless():
	with pytest.raises(NoCutError):
		cut_endpoints(1., MaterialParams.plasma(1.))


def test_cut_intervals_split():
	m = MaterialParams.drude(1., 3.)
	k = 0.1
	pieces = cut_intervals(k, m)
	print(pieces)
	assert len(pieces) == 2
	(a, b), (c, d) = pieces
	assert np.allclose([a, b, c], [0.0329, 0.3484, 2.6187], atol = 1e-3)
	assert d == m.gamma
	assert cut_endpoints(k, m) == (a, m.gamma)
	for lo, hi in pieces:
		xi = np.linspace(lo, hi, 12)[1:-1]
		assert np.all(-xi**2 + xi/(m.gamma - xi) - k**2 > 0)
	gap = np.linspace(b, c, 12)[1:-1]
	assert np.all(-gap**2 + gap/(m.gamma - gap) - k**2 < 0)
	assert np.all(np.abs(cut_phase(Polarization.TE, gap, k, 1., m)) < 1e-12)


@pytest.mark.parametrize("k", [0., 1e-3, 0.5, 10.])
def test_cut_intervals_single(k):
	m = MaterialParams.drude(1., 0.01)
	assert cut_intervals(k, m) == [cut_endpoints(k, m)]


@pytest.mark.parametrize("pol", list(Polarization))
def test_cut_phase_offset_agreement(pol):
	m = MaterialParams.drude(1., 0.01)
	L = 1.
	xi, k = cut_grid(0.1, 1., m, n = 50)
	exact = cut_phase(pol, xi, k, L, m)
	offset = cut_phase_offset(pol, xi, k, L, m, offset = 1e-8)
	err = np.max(np.abs(exact - offset)/np.maximum(np.abs(exact), 1e-12))
	print(pol, "max relative deviation", err)
	assert err < 1e-6
	assert np.all(exact != 0)


@pytest.mark.parametrize("pol", list(Polarization))
def test_cut_locality(pol):
	m = MaterialParams.drude(1., 0.01)
	for k in [1e-3, 0.1, 2.]:
		xi_low, xi_high = cut_endpoints(k, m)
		outside = np.hstack([np.linspace(0.01, 0.99, 20)*xi_low, np.geomspace(1.01, 1e3, 20)*xi_high])
		phase = cut_phase(pol, outside, k, 1., m)
		assert np.all(np.abs(phase) < 1e-12)


def test_cut_phase_lossless():
	m = MaterialParams.plasma(1.)
	phase = cut_phase(Polarization.TE, np.geomspace(1e-3, 10, 10), 0.5, 1., m)
	assert np.all(np.abs(phase) < 1e-12)


if __name__ == '__main__':
	test_cut_phase_offset_agreement(Polarization.TE)
