r""" Exceptions and small numerical helpers shared across casmodes
"""

import numpy as np
from scipy.special import zeta

__all__ = [
	'DomainError',
	'SingularityError',
	'NoCutError',
	'NumericalError',
	'ConvergenceError',
	'BracketError',
	'ZETA3',
	'PURELY_IMAGINARY_ATOL',
	'decaying_sqrt',
	'richardson',
	]

ZETA3 = float(zeta(3))

# Absolute tolerance on |Re(omega)| below which a frequency counts as purely imaginary
PURELY_IMAGINARY_ATOL = 1e-14


class DomainError(ValueError):
	r""" An input lies outside the domain of the requested operation
	"""
	pass


class SingularityError(ZeroDivisionError):
	r""" Evaluation at a pole or at a vanishing denominator
	"""
	pass


class NoCutError(ValueError):
	r""" A branch-cut quantity was requested for a lossless (gamma = 0) metal
	"""
	pass


class NumericalError(ArithmeticError):
	r""" A numerical procedure failed to reach its tolerance

	Parameters
	----------
	msg: str
		Description of the failure
	value: float, optional
		Best available estimate at the time of failure
	achieved_tol: float, optional
		Error estimate attached to value
	"""
	def __init__(self, msg, value = None, achieved_tol = None):
		super().__init__(msg)
		self.value = value
		self.achieved_tol = achieved_tol


class ConvergenceError(NumericalError):
	pass


class BracketError(NumericalError):
	pass


def decaying_sqrt(z):
	r""" Square root on the branch with non-negative imaginary part

	This is the root for which :math:`e^{i k z}` decays for :math:`z \to +\infty`.

	Parameters
	----------
	z: array-like
		Complex argument

	Returns
	-------
	np.ndarray
		:math:`\sqrt{z}` with :math:`\mathrm{Im} \sqrt{z} \ge 0`
	"""
	w = np.sqrt(np.asarray(z, dtype = complex))
	return np.where(w.imag < 0, -w, w)


def richardson(f, h, levels = 2):
	r""" Extrapolate f(h) to h -> 0 assuming an expansion in integer powers of h

	The step sequence h, h/2, ..., h/2**levels is combined through a Neville table.

	Parameters
	----------
	f: callable
		Function of the step size; may return arrays
	h: float
		Largest step size
	levels: int
		Number of halvings

	Returns
	-------
	np.ndarray
		Extrapolated value
	"""
	assert levels >= 0, "levels must be non-negative"
	table = [np.asarray(f(h/2**j)) for j in range(levels + 1)]
	for order in range(1, levels + 1):
		factor = 2.**order
		table = [ (factor*table[j+1] - table[j])/(factor - 1) for j in range(len(table) - 1)]
	return table[0]
