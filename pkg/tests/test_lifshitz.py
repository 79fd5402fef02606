import numpy as np
import pytest
from casmodes import *
from casmodes import lifshitz

QUAD = QuadratureConfig(rel_tol = 1e-7)


def test_perfect_mirror():
	m, geometry = perfect_mirror()
	res = casimir_energy_T0(geometry, m)
	print(res)
	assert abs(res.eta - 1) < 1e-3
	assert res.total == res.te + res.tm
	assert res.matsubara_terms == 0


def test_transparent():
	res = casimir_energy_T0(Geometry(1.), MaterialParams.plasma(1e-3), QUAD)
	print(res.eta)
	assert 0 < res.eta < 1e-2


@pytest.mark.parametrize("gamma", [0., 1e-3, 0.1])
def test_negative(gamma):
	m = MaterialParams.drude(1., gamma)
	res = casimir_energy_T0(Geometry.from_ratio(0.1, m), m, QUAD)
	assert res.total < 0
	assert res.te < 0 and res.tm < 0
	assert res.polarization(Polarization.TE) == res.te
	assert res.polarization('TM') == res.tm


def test_weak_damping():
	plasma = MaterialParams.plasma(1.)
	drude = MaterialParams.drude(1., 1e-4)
	geometry = Geometry.from_ratio(1., plasma)
	e0 = casimir_energy_T0(geometry, plasma, QUAD).total
	e1 = casimir_energy_T0(geometry, drude, QUAD).total
	print(e0, e1)
	assert abs(e1/e0 - 1) < 1e-3


def test_monotone_in_distance():
	m = MaterialParams.drude(1., 1e-3)
	totals = [casimir_energy_T0(Geometry.from_ratio(r, m), m, QUAD).total for r in [0.01, 0.1, 1., 10.]]
	print(totals)
	assert np.all(np.diff(np.abs(totals)) < 0)


def test_inner_error_reported(monkeypatch):
	real = lifshitz.integrate

	# inflate only the finite inner xi integrals
	def padded(f, domain, quad, **kwargs):
		value, err = real(f, domain, quad, **kwargs)
		if np.isfinite(domain[1]):
			err += 1e-3*abs(value)
		return value, err

	monkeypatch.setattr(lifshitz, 'integrate', padded)
	m = MaterialParams.drude(1., 0.01)
	res = casimir_energy_T0(Geometry.from_ratio(1., m), m, QuadratureConfig(rel_tol = 1e-6))
	print(res.achieved_tol)
	assert res.achieved_tol >= 0.999e-3


def test_reported_tolerance_bounds_error():
	m = MaterialParams.drude(1., 0.01)
	geometry = Geometry.from_ratio(1., m)
	loose = casimir_energy_T0(geometry, m, QuadratureConfig(rel_tol = 1e-4))
	tight = casimir_energy_T0(geometry, m, QuadratureConfig(rel_tol = 1e-9))
	print(loose.total, tight.total, loose.achieved_tol)
	assert abs(loose.total/tight.total - 1) <= loose.achieved_tol + 1e-9


def test_matsubara_zero_term():
	m = MaterialParams.drude(1., 1e-3)
	geometry = Geometry(1.)
	temp = Temperature(0.1)
	assert matsubara_term(Polarization.TE, 0, geometry, m, temp) == (0., 0.)
	value, _ = matsubara_term(Polarization.TE, 0, geometry, m.as_plasma(), temp)
	assert value < 0
	with pytest.raises(DomainError):
		matsubara_term(Polarization.TE, -1, geometry, m, temp)


def test_high_temperature_plasma_te():
	m, geometry, temp = classical_regime()
	plasma = m.as_plasma()
	res = free_energy_T(geometry, plasma, temp, QUAD)
	reference = plasma_highT_TE_reference(geometry, plasma, temp, QUAD)
	print(res.te, reference)
	assert abs(res.te/reference - 1) < 0.01


def test_drude_plasma_gap():
	m, geometry, temp = classical_regime()
	drude = free_energy_T(geometry, m, temp, QUAD)
	plasma = free_energy_T(geometry, m.as_plasma(), temp, QUAD)
	print(drude.te, plasma.te)
	assert abs(drude.te) < 0.1*abs(plasma.te)


def test_low_temperature_limit():
	m = MaterialParams.plasma(1.)
	geometry = Geometry(1.)
	temp = Temperature(0.005)
	free = free_energy_T(geometry, m, temp, QUAD)
	energy = casimir_energy_T0(geometry, m, QUAD)
	print(free.total, energy.total, free.matsubara_terms)
	assert free.matsubara_terms > 1
	assert abs(free.total/energy.total - 1) < 5e-3


def test_free_energy_domain():
	with pytest.raises(DomainError):
		free_energy_T(Geometry(1.), MaterialParams.plasma(1.), Temperature(0.))


def test_propagating_minus_eddy():
	m, geometry, temp = classical_regime()
	ratio = propagating_minus_eddy_check_TE(geometry, m, temp, QUAD)
	print(ratio)
	assert abs(ratio) < 0.1
	with pytest.raises(NoCutError):
		propagating_minus_eddy_check_TE(geometry, m.as_plasma(), temp, QUAD)


def test_verbose_matsubara(capsys):
	m, geometry, temp = classical_regime()
	free_energy_T(geometry, m, temp, QUAD, verbose = True)
	out = capsys.readouterr().out
	assert 'running sum' in out


if __name__ == '__main__':
	test_perfect_mirror()
