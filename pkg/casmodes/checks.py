r""" Built-in consistency checks on canonical parameter sets
"""

from dataclasses import dataclass
import numpy as np

from .util import NumericalError
from .params import CutoffLambda
from .plasmon import plasmon_energy, plasmon_energy_asymptotic, sum_rule_residual
from .eddy import te_cancellation_ratio
from .lifshitz import casimir_energy_T0
from .demos import plasmon_samples, short_distance, classical_regime, perfect_mirror

__all__ = [
	'CheckResult',
	'CHECKS',
	'check_sum_rule',
	'check_lambda_independence',
	'check_te_cancellation',
	'check_short_distance',
	'check_perfect_mirror',
	'run_check',
	]


@dataclass(frozen = True)
class CheckResult:
	r""" Outcome of a named check

	Parameters
	----------
	name: str
	measured: float
	expected: float
	tolerance: float
		Largest admissible |measured - expected|
	passed: bool
	detail: str
		Diagnostics, e.g. the message of a numerical failure
	"""
	name: str
	measured: float
	expected: float
	tolerance: float
	passed: bool
	detail: str = ''

	@classmethod
	def compare(cls, name, measured, expected, tolerance, detail = ''):
		passed = bool(np.isfinite(measured) and abs(measured - expected) < tolerance)
		return cls(name, float(measured), float(expected), float(tolerance), passed, detail)

	def report(self):
		status = 'PASS' if self.passed else 'FAIL'
		line = f"{self.name}: measured {self.measured:.10g}, expected {self.expected:.10g}, tolerance {self.tolerance:.3g} -> {status}"
		if self.detail:
			line += f" ({self.detail})"
		return line


def check_sum_rule(quad = None, samples = 100, seed = 0):
	r""" Largest plasmon sum-rule residual over random (k, L, gamma), including overdamped cases
	"""
	residuals = [abs(sum_rule_residual(k, geometry, m)) for k, geometry, m in plasmon_samples(samples, seed)]
	return CheckResult.compare('sum-rule', max(residuals), 0., 1e-13, f"{samples} samples")


def check_lambda_independence(quad = None):
	r""" Largest relative change of the plasmon energy when the bath cutoff varies over [gamma, 100]
	"""
	m, geometry = short_distance(gamma_ratio = 0.01)
	energies = [plasmon_energy(geometry, m, CutoffLambda(lam), quad) for lam in (m.gamma, 1., 100.)]
	change = max(abs(e/energies[0] - 1) for e in energies[1:])
	return CheckResult.compare('lambda-independence', change, 0., 1e-6, "L/lambda_p = 0.01, gamma/omega_p = 0.01")


def check_te_cancellation(quad = None):
	r""" Classical TE eddy free energy against minus the plasma-model zero-frequency term
	"""
	m, geometry, temp = classical_regime()
	ratio = te_cancellation_ratio(geometry, m, temp, quad)
	return CheckResult.compare('te-cancellation', ratio, 1., 0.05,
		f"gamma/omega_p = {m.gamma:g}, L/lambda_p = {geometry.ratio(m):g}, tL = {temp.t*geometry.L:g}")


def check_short_distance(quad = None):
	r""" Plasmon energy against its short-distance asymptotic form at L/lambda_p = 0.01
	"""
	m, geometry = short_distance(gamma_ratio = 0.005)
	value = plasmon_energy(geometry, m, CutoffLambda(1.), quad)
	ratio = value/plasmon_energy_asymptotic(geometry, m)
	return CheckResult.compare('short-distance', ratio, 1., 0.02, "L/lambda_p = 0.01, gamma/omega_p = 0.005")


def check_perfect_mirror(quad = None):
	r""" Reduction factor of the Lifshitz energy for omega_p L = 1e4
	"""
	m, geometry = perfect_mirror()
	eta = casimir_energy_T0(geometry, m, quad).eta
	return CheckResult.compare('perfect-mirror', eta, 1., 1e-3, "omega_p L = 1e4")


CHECKS = {
	'sum-rule': check_sum_rule,
	'lambda-independence': check_lambda_independence,
	'te-cancellation': check_te_cancellation,
	'short-distance': check_short_distance,
	'perfect-mirror': check_perfect_mirror,
	}


def run_check(name, quad = None):
	r""" Run a named check; numerical failures are reported as FAIL

	Parameters
	----------
	name: str
		One of the keys of :data:`CHECKS`
	quad: QuadratureConfig, optional

	Returns
	-------
	CheckResult
	"""
	if name not in CHECKS:
		raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
	try:
		return CHECKS[name](quad)
	except NumericalError as e:
		return CheckResult(name, np.nan if e.value is None else e.value, np.nan, np.nan, False, f"numerical failure: {e}")
