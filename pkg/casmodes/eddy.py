r""" Eddy-current (Foucault) contribution to the Casimir energy

Eddy currents are overdamped diffusive modes with purely imaginary frequencies filling
the cut :math:`\omega \in (-i\gamma, -i\xi_0(k))`. Their contribution is written as an
integral along the cut of the phase of the round-trip mode function,

.. math::

	\int_0^\infty \frac{k\,dk}{2\pi} \int_{\xi_0(k)}^{\gamma} d\xi\, w(\xi)\,
	\mathrm{Im}\ln\left[1 - r_p^2(-i\xi - 0^+) e^{-2\kappa L}\right],
	\qquad \kappa = \sqrt{\xi^2 + k^2},

with :math:`w = \frac{1}{2\pi^2}(\ln(\xi/\Lambda) + 1)` at zero temperature and
:math:`w = -k_BT/(2\pi\xi)` in the classical limit.
"""

from dataclasses import dataclass
from enum import Enum
import numpy as np

from .util import DomainError, SingularityError, NoCutError
from .params import CutoffLambda
from .quadrature import QuadratureConfig, integrate
from .reflection import Polarization, cut_intervals, cut_phase, static_reflection

__all__ = [
	'Regime',
	'EddyResult',
	'cut_k_max',
	'eddy_cut_integral',
	'eddy_energy_T0',
	'eddy_cutoff_slope',
	'eddy_free_energy_highT',
	'plasma_highT_reference',
	'plasma_highT_TE_reference',
	'eddy_fraction_highT',
	'te_cancellation_ratio',
	]


class Regime(Enum):
	ZERO_T = 'zero-T'
	HIGH_T = 'high-T'


@dataclass(frozen = True)
class EddyResult:
	r""" Eddy-current energy (zero temperature) or free energy (classical limit) per area

	Parameters
	----------
	value: float
		Energy per area
	polarization: Polarization
	regime: Regime
	cutoff_used: CutoffLambda
		Bath cutoff; None in the classical limit, which does not depend on it
	achieved_tol: float
		Relative error estimate of value
	no_cut: bool
		True when the metal is lossless and value is exactly zero
	"""
	value: float
	polarization: Polarization
	regime: Regime
	cutoff_used: CutoffLambda = None
	achieved_tol: float = 0.
	no_cut: bool = False


def _relative(err, value):
	return err/abs(value) if value != 0 else err


def cut_k_max(geometry, quad):
	r""" Upper limit of the k integral along the cut

	The round trip is bounded by :math:`e^{-2kL}`; beyond k_max this bound is below
	a thousandth of the requested relative tolerance.
	"""
	return -np.log(1e-3*quad.rel_tol)/(2*geometry.L)


def _inner_cut_integral(pol, k, geometry, m, weight, quad):
	r""" :math:`\int d\xi\, w(\xi) \mathrm{Im}\ln[\ldots]` along the cut at fixed k

	Each piece of the cut is split at the geometric mean of its ends. Near the lower
	end :math:`\xi = \xi_a/\cos^2\theta` resolves the diffusive scale :math:`\xi \sim Dk^2`;
	near the upper end :math:`\xi = \xi_b - (\xi_b - \xi_m)(1 - v)^2` removes the
	square-root behaviour at the pole of the permittivity or at an interior branch point.
	"""
	L = geometry.L
	value = 0.
	error = 0.
	for xi_a, xi_b in cut_intervals(k, m):
		if not 0 < xi_a < xi_b:
			continue
		xi_mid = np.sqrt(xi_a*xi_b)
		below_b = np.nextafter(xi_b, 0)
		span = xi_b - xi_mid

		def lower(theta):
			c = np.cos(theta)
			xi = xi_a/c**2
			jac = 2*xi_a*np.sin(theta)/c**3
			return weight(xi)*cut_phase(pol, xi, k, L, m)*jac

		def upper(v):
			xi = np.minimum(xi_b - span*(1 - v)**2, below_b)
			return weight(xi)*cut_phase(pol, xi, k, L, m)*(2*span*(1 - v))

		theta_mid = np.arccos(np.sqrt(xi_a/xi_mid))
		v1, e1 = integrate(lower, (0., theta_mid), quad)
		v2, e2 = integrate(upper, (0., 1.), quad)
		value += v1 + v2
		error += e1 + e2
	return value, error


def eddy_cut_integral(pol, geometry, m, weight, quad = None, verbose = False):
	r""" Weighted integral of the mode-function phase along the eddy-current cut

	.. math::

		\int_0^{k_\mathrm{max}} \frac{k\,dk}{2\pi} \int_{\xi_0(k)}^{\gamma} d\xi\, w(\xi)\,
		\mathrm{Im}\ln\left[1 - r_p^2(-i\xi - 0^+) e^{-2\kappa L}\right]

	Parameters
	----------
	pol: Polarization
	geometry: Geometry
	m: MaterialParams
		Material with gamma > 0
	weight: callable
		Vectorized weight :math:`w(\xi)`
	quad: QuadratureConfig, optional
	verbose: bool
		Print the progress of the outer k integral

	Returns
	-------
	value: float
	error: float
		Absolute error estimate

	Raises
	------
	NoCutError
		For a lossless metal
	"""
	if quad is None:
		quad = QuadratureConfig()
	pol = Polarization(pol)
	if m.lossless:
		raise NoCutError("a lossless metal has no eddy-current cut")

	k_max = cut_k_max(geometry, quad)
	outer = quad.with_breakpoints([1/geometry.L, m.omega_p], 0, k_max)
	inner = quad.with_breakpoints([])

	inner_errors = []

	def f(ks):
		values = np.empty(len(ks))
		for i, k in enumerate(ks):
			v, e = _inner_cut_integral(pol, k, geometry, m, weight, inner)
			values[i] = k/(2*np.pi)*v
			inner_errors.append(k/(2*np.pi)*e)
		return values

	value, err = integrate(f, (0., k_max), outer, verbose = verbose)
	# inner errors enter through the outer rule, whose weights sum to k_max
	mean_inner = np.mean(inner_errors) if inner_errors else 0.
	return value, err + mean_inner*k_max


def eddy_energy_T0(pol, geometry, m, cutoff, quad = None, verbose = False):
	r""" Zero-temperature eddy-current energy per area for one polarization

	.. math::

		E_\mathrm{eddy} = \int_0^\infty \frac{d\xi}{\pi} \int \frac{k\,dk}{2\pi}\,
		\partial_\xi\left(\frac{\xi}{2\pi}\ln\frac{\xi}{\Lambda}\right)
		\mathrm{Im}\ln\left[1 - r_p^2(-i\xi - 0^+) e^{-2\kappa L}\right]

	The energy is affine in :math:`\ln\Lambda`. For TE it is positive (repulsive) once
	:math:`\Lambda` exceeds a threshold, which lies between :math:`\gamma` and
	:math:`e\gamma` at separations well below the plasma wavelength.

	Parameters
	----------
	pol: Polarization
	geometry: Geometry
	m: MaterialParams
	cutoff: CutoffLambda
	quad: QuadratureConfig, optional
	verbose: bool

	Returns
	-------
	EddyResult
		Exactly zero with ``no_cut`` set for a lossless metal
	"""
	pol = Polarization(pol)
	if m.lossless:
		return EddyResult(0., pol, Regime.ZERO_T, cutoff, 0., no_cut = True)
	lam = cutoff.lambda_cut
	weight = lambda xi: (np.log(xi/lam) + 1)/(2*np.pi**2)
	value, err = eddy_cut_integral(pol, geometry, m, weight, quad, verbose = verbose)
	return EddyResult(value, pol, Regime.ZERO_T, cutoff, _relative(err, value))


def eddy_cutoff_slope(pol, geometry, m, quad = None):
	r""" :math:`\partial E_\mathrm{eddy}/\partial \ln\Lambda` at zero temperature

	The cutoff enters only through :math:`-\ln\Lambda/(2\pi^2)` in the weight, so the
	slope is :math:`-\frac{1}{2\pi^2}\int\frac{k\,dk}{2\pi}\int d\xi\,\mathrm{Im}\ln[\ldots]`.

	Returns
	-------
	float
		Zero for a lossless metal
	"""
	if m.lossless:
		return 0.
	value, _ = eddy_cut_integral(pol, geometry, m, np.ones_like, quad)
	return -value/(2*np.pi**2)


def eddy_free_energy_highT(pol, geometry, m, temp, quad = None, verbose = False):
	r""" Classical-limit eddy-current free energy per area for one polarization

	Each purely imaginary mode carries the classical free energy
	:math:`\frac{k_BT}{2}\ln(\xi/k_BT)` (the 1/2 being its weight in the mode sum), giving

	.. math::

		F_\mathrm{eddy} = -\int_0^\infty \frac{d\xi}{\pi} \int \frac{k\,dk}{2\pi}\,
		\frac{k_BT}{2\xi}\,\mathrm{Im}\ln\left[1 - r_p^2(-i\xi - 0^+) e^{-2\kappa L}\right].

	The result is linear in the temperature and independent of the bath cutoff.

	Parameters
	----------
	pol: Polarization
	geometry: Geometry
	m: MaterialParams
	temp: Temperature
		Positive temperature
	quad: QuadratureConfig, optional
	verbose: bool

	Returns
	-------
	EddyResult
	"""
	pol = Polarization(pol)
	if not temp.t > 0:
		raise DomainError("the classical eddy free energy needs a positive temperature")
	if m.lossless:
		return EddyResult(0., pol, Regime.HIGH_T, None, 0., no_cut = True)
	weight = lambda xi: -1/(2*np.pi*xi)
	value, err = eddy_cut_integral(pol, geometry, m, weight, quad, verbose = verbose)
	return EddyResult(temp.t*value, pol, Regime.HIGH_T, None, _relative(err, value))


def plasma_highT_reference(pol, geometry, m, temp, quad = None, full_output = False):
	r""" Zero-frequency Matsubara term of the plasma-model free energy

	.. math::

		\frac{k_BT}{2} \int_0^\infty \frac{k\,dk}{2\pi}
		\ln\left[1 - r_p^2(0, k) e^{-2kL}\right]

	evaluated with the lossless material of the same plasma frequency.

	Parameters
	----------
	pol: Polarization
	geometry: Geometry
	m: MaterialParams
		Only the plasma frequency is used
	temp: Temperature
	quad: QuadratureConfig, optional
	full_output: bool
		If true, also return the absolute error estimate

	Returns
	-------
	float
	"""
	if quad is None:
		quad = QuadratureConfig()
	if not temp.t > 0:
		raise DomainError("the classical free energy needs a positive temperature")
	pol = Polarization(pol)
	plasma = m.as_plasma()
	L = geometry.L

	def f(k):
		r = static_reflection(pol, k, plasma)
		return k/(2*np.pi)*np.log1p(-r**2*np.exp(-2*k*L))

	cfg = quad.with_breakpoints([m.omega_p], 0, np.inf)
	value, err = integrate(f, (0., np.inf), cfg, scale = 1/(2*L))
	if full_output:
		return 0.5*temp.t*value, 0.5*temp.t*err
	return 0.5*temp.t*value


def plasma_highT_TE_reference(geometry, m, temp, quad = None):
	r""" TE zero-frequency term of the plasma-model free energy, see :func:`plasma_highT_reference`
	"""
	return plasma_highT_reference(Polarization.TE, geometry, m, temp, quad)


def eddy_fraction_highT(pol, geometry, m, temp, quad = None):
	r""" Ratio of the classical eddy free energy to the plasma-model zero-frequency term

	Raises
	------
	SingularityError
		If the plasma-model reference underflows to zero
	"""
	eddy = eddy_free_energy_highT(pol, geometry, m, temp, quad)
	reference = plasma_highT_reference(pol, geometry, m, temp, quad)
	if reference == 0 or not np.isfinite(reference):
		raise SingularityError("the plasma-model reference free energy underflowed")
	return eddy.value/reference


def te_cancellation_ratio(geometry, m, temp, quad = None):
	r""" :math:`F^\mathrm{TE}_\mathrm{eddy}/(-F^\mathrm{TE}_\mathrm{plasma})` in the classical limit

	Tends to 1 for :math:`\gamma \ll \omega_p` at large separation: the eddy currents
	cancel the zero-frequency TE term that the plasma model predicts.
	"""
	return -eddy_fraction_highT(Polarization.TE, geometry, m, temp, quad)
