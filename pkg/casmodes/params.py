r""" Material models, geometry and the shared value types

All quantities are expressed in natural units with :math:`\hbar = c = 1`
and the plasma frequency as the frequency scale: lengths in units of
:math:`c/\omega_p`, energies per area in units of :math:`\hbar \omega_p^3/c^2`.
The :class:`Units` class converts at the boundary to SI.
"""

from dataclasses import dataclass
from enum import Enum
import numpy as np
import scipy.constants

try:
	from functools import cached_property
except ImportError:
	from backports.cached_property import cached_property

from .util import DomainError, PURELY_IMAGINARY_ATOL

__all__ = [
	'MaterialModel',
	'MaterialParams',
	'Geometry',
	'CutoffLambda',
	'ComplexFrequency',
	'Temperature',
	'Units',
	'ideal_casimir_energy_per_area',
	'reduction_factor',
	'electronvolt_to_angular_frequency',
	]


class MaterialModel(Enum):
	DRUDE = 'drude'
	PLASMA = 'plasma'


def _positive_finite(name, value):
	value = float(value)
	if not (np.isfinite(value) and value > 0):
		raise DomainError(f"{name} must be positive and finite, got {value!r}")
	return value


@dataclass(frozen = True)
class MaterialParams:
	r""" Drude or plasma description of a metal

	The permittivity is :math:`\varepsilon(\omega) = 1 - \omega_p^2/(\omega(\omega + i\gamma))`;
	the plasma model is the lossless case :math:`\gamma = 0`.

	Parameters
	----------
	omega_p: float
		Plasma frequency
	gamma: float
		Damping rate
	model: MaterialModel
		Drude or plasma; the plasma model requires gamma = 0
	"""
	omega_p: float = 1.
	gamma: float = 0.
	model: MaterialModel = MaterialModel.DRUDE

	def __post_init__(self):
		object.__setattr__(self, 'omega_p', _positive_finite('omega_p', self.omega_p))
		gamma = float(self.gamma)
		if not (np.isfinite(gamma) and gamma >= 0):
			raise DomainError(f"gamma must be non-negative and finite, got {gamma!r}")
		object.__setattr__(self, 'gamma', gamma)
		object.__setattr__(self, 'model', MaterialModel(self.model))
		if self.model is MaterialModel.PLASMA and gamma != 0:
			raise DomainError("the plasma model requires gamma = 0")

	@classmethod
	def drude(cls, omega_p = 1., gamma = 0.):
		return cls(omega_p, gamma, MaterialModel.DRUDE)

	@classmethod
	def plasma(cls, omega_p = 1.):
		return cls(omega_p, 0., MaterialModel.PLASMA)

	def as_plasma(self):
		r""" The lossless material with the same plasma frequency
		"""
		return MaterialParams.plasma(self.omega_p)

	@property
	def lossless(self):
		return self.gamma == 0

	@cached_property
	def lambda_p(self):
		r""" Plasma wavelength :math:`2\pi c/\omega_p`
		"""
		return 2*np.pi/self.omega_p

	@cached_property
	def diffusion_constant(self):
		r""" Diffusion constant :math:`D = \gamma c^2/\omega_p^2` of the eddy currents
		"""
		return self.gamma/self.omega_p**2


@dataclass(frozen = True)
class Geometry:
	r""" Two half-spaces separated by a vacuum gap of width L
	"""
	L: float

	def __post_init__(self):
		object.__setattr__(self, 'L', _positive_finite('L', self.L))

	@classmethod
	def from_ratio(cls, ratio, material):
		r""" Geometry with separation ``ratio`` times the plasma wavelength of ``material``
		"""
		return cls(_positive_finite('L/lambda_p', ratio)*material.lambda_p)

	def ratio(self, material):
		return self.L/material.lambda_p


@dataclass(frozen = True)
class CutoffLambda:
	r""" Cutoff frequency of the bath spectral density
	"""
	lambda_cut: float

	def __post_init__(self):
		object.__setattr__(self, 'lambda_cut', _positive_finite('lambda_cut', self.lambda_cut))


@dataclass(frozen = True)
class Temperature:
	r""" Thermal energy :math:`k_B T` in units of :math:`\hbar \omega_p`
	"""
	t: float

	def __post_init__(self):
		t = float(self.t)
		if not (np.isfinite(t) and t >= 0):
			raise DomainError(f"temperature must be non-negative and finite, got {t!r}")
		object.__setattr__(self, 't', t)


@dataclass(frozen = True)
class ComplexFrequency:
	r""" A mode eigenfrequency in the closed lower half plane

	Parameters
	----------
	value: complex
		The eigenfrequency
	purely_imaginary: bool, optional
		Whether the mode lies on the imaginary axis; inferred from
		:math:`|\mathrm{Re}\, \omega| \le 10^{-14}` when omitted and
		checked against that test when given.
	"""
	value: complex
	purely_imaginary: bool = None

	def __post_init__(self):
		value = complex(self.value)
		if not (np.isfinite(value.real) and np.isfinite(value.imag)):
			raise DomainError(f"frequency must be finite, got {value!r}")
		if value.imag > 0:
			raise DomainError(f"physical modes decay: Im(omega) must be <= 0, got {value!r}")
		on_axis = abs(value.real) <= PURELY_IMAGINARY_ATOL
		if self.purely_imaginary is None:
			object.__setattr__(self, 'purely_imaginary', on_axis)
		elif bool(self.purely_imaginary) != on_axis:
			raise DomainError(f"purely_imaginary = {self.purely_imaginary} is inconsistent with omega = {value!r}")
		else:
			object.__setattr__(self, 'purely_imaginary', bool(self.purely_imaginary))
		object.__setattr__(self, 'value', value)

	@property
	def weight(self):
		r""" Weight in the mode sum: 1/2 for purely imaginary modes, 1 otherwise
		"""
		return 0.5 if self.purely_imaginary else 1.


def ideal_casimir_energy_per_area(geometry):
	r""" Casimir energy per area between perfect mirrors, :math:`-\pi^2/(720 L^3)`
	"""
	L = _positive_finite('L', geometry.L)
	return -np.pi**2/(720*L**3)


def reduction_factor(e, geometry):
	r""" Energy normalized by the perfect-mirror value
	"""
	return e/ideal_casimir_energy_per_area(geometry)


@dataclass(frozen = True)
class Units:
	r""" Conversion between SI and the internal units fixed by a plasma frequency

	Parameters
	----------
	omega_p: float
		Plasma angular frequency in rad/s
	"""
	omega_p: float

	def __post_init__(self):
		object.__setattr__(self, 'omega_p', _positive_finite('omega_p', self.omega_p))

	@classmethod
	def from_electronvolt(cls, energy):
		r""" Units for a plasma frequency given as :math:`\hbar \omega_p` in eV
		"""
		return cls(electronvolt_to_angular_frequency(energy))

	@cached_property
	def length_scale(self):
		r""" :math:`c/\omega_p` in metres
		"""
		return scipy.constants.c/self.omega_p

	@cached_property
	def energy_per_area_scale(self):
		r""" :math:`\hbar \omega_p^3/c^2` in J/m^2
		"""
		return scipy.constants.hbar*self.omega_p**3/scipy.constants.c**2

	def length_to_internal(self, L):
		return L/self.length_scale

	def length_to_si(self, L):
		return L*self.length_scale

	def frequency_to_internal(self, omega):
		return omega/self.omega_p

	def frequency_to_si(self, omega):
		return omega*self.omega_p

	def temperature_to_internal(self, T):
		return scipy.constants.k*T/(scipy.constants.hbar*self.omega_p)

	def temperature_to_si(self, t):
		return t*scipy.constants.hbar*self.omega_p/scipy.constants.k

	def energy_per_area_to_si(self, e):
		return e*self.energy_per_area_scale

	def energy_per_area_to_internal(self, e):
		return e/self.energy_per_area_scale


def electronvolt_to_angular_frequency(energy):
	r""" Angular frequency in rad/s of a photon with the given energy in eV
	"""
	return energy*scipy.constants.e/scipy.constants.hbar
