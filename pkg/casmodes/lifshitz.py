r""" Lifshitz energy and Matsubara free energy between two Drude or plasma half-spaces

These imaginary-frequency expressions do not resolve individual modes and serve as the
reference against which the plasmon and eddy-current contributions are compared.
"""

from dataclasses import dataclass
import math
import numpy as np
from iterprinter import IterationPrinter

from .util import DomainError, SingularityError, NoCutError, ConvergenceError
from .params import reduction_factor
from .quadrature import QuadratureConfig, integrate
from .reflection import Polarization, EvaluationPoint, fresnel_r, static_reflection
from .eddy import eddy_free_energy_highT

__all__ = [
	'LifshitzBreakdown',
	'casimir_energy_T0',
	'matsubara_term',
	'free_energy_T',
	'propagating_minus_eddy_check_TE',
	]

# Matsubara sums stop once a term drops below this fraction of the running sum
_MATSUBARA_RTOL = 1e-4
_MATSUBARA_MAX_TERMS = 10**6


@dataclass(frozen = True)
class LifshitzBreakdown:
	r""" Lifshitz energy (or free energy) per area split by polarization

	Parameters
	----------
	total: float
		Sum of the TE and TM parts
	te: float
	tm: float
	eta: float
		total divided by the perfect-mirror energy
	achieved_tol: float
		Relative error estimate of total
	matsubara_terms: int
		Number of Matsubara frequencies summed explicitly; 0 at zero temperature
	"""
	total: float
	te: float
	tm: float
	eta: float
	achieved_tol: float = 0.
	matsubara_terms: int = 0

	def __post_init__(self):
		assert self.total == self.te + self.tm, "total must be the sum of the polarizations"

	@classmethod
	def from_parts(cls, te, tm, geometry, achieved_tol = 0., matsubara_terms = 0):
		total = te + tm
		return cls(total, te, tm, reduction_factor(total, geometry), achieved_tol, matsubara_terms)

	def polarization(self, pol):
		return self.te if Polarization(pol) is Polarization.TE else self.tm


def _round_trip_log(pol, xi, kappa, L, m):
	r""" :math:`\ln[1 - r_p^2(i\xi, k) e^{-2\kappa L}]` with :math:`k = \sqrt{\kappa^2 - \xi^2}`
	"""
	k = np.sqrt(np.maximum((kappa - xi)*(kappa + xi), 0.))
	r = np.real(fresnel_r(pol, EvaluationPoint.imaginary_axis(xi, k), m))
	return np.log1p(-r**2*np.exp(-2*kappa*L))


def _energy_T0_polarization(pol, geometry, m, quad, verbose):
	L = geometry.L

	inner_rel = [0.]

	# After exchanging the order of integration, xi runs over (0, kappa) at fixed kappa
	def outer(kappas):
		values = np.empty(len(kappas))
		for i, kappa in enumerate(kappas):
			cfg = quad.with_breakpoints([m.gamma, m.omega_p], 0, kappa)
			v, e = integrate(lambda xi: _round_trip_log(pol, xi, kappa, L, m), (0., kappa), cfg)
			values[i] = kappa*v/(4*np.pi**2)
			if v != 0:
				inner_rel.append(e/abs(v))
		return values

	cfg = quad.with_breakpoints([m.gamma, m.omega_p], 0, np.inf)
	value, err = integrate(outer, (0., np.inf), cfg, scale = 1/(2*L), verbose = verbose)
	# the integrand has one sign, so the worst relative inner error carries over
	return value, err + max(inner_rel)*abs(value)


def casimir_energy_T0(geometry, m, quad = None, verbose = False):
	r""" Zero-temperature Lifshitz energy per area

	.. math::

		\frac{E}{A} = \int_0^\infty \frac{d\xi}{2\pi} \int_0^\infty \frac{k\,dk}{2\pi}
		\sum_p \ln\left[1 - r_p^2(i\xi, k) e^{-2\kappa L}\right]

	evaluated as :math:`\frac{1}{4\pi^2}\int_0^\infty \kappa\,d\kappa \int_0^\kappa d\xi \ldots`.

	Parameters
	----------
	geometry: Geometry
	m: MaterialParams
	quad: QuadratureConfig, optional
	verbose: bool
		Print quadrature progress for each polarization

	Returns
	-------
	LifshitzBreakdown
	"""
	if quad is None:
		quad = QuadratureConfig()
	parts = {}
	error = 0.
	for pol in Polarization:
		value, err = _energy_T0_polarization(pol, geometry, m, quad, verbose)
		parts[pol] = value
		error += err
	total = parts[Polarization.TE] + parts[Polarization.TM]
	return LifshitzBreakdown.from_parts(parts[Polarization.TE], parts[Polarization.TM], geometry,
		achieved_tol = error/abs(total) if total != 0 else error)


def matsubara_term(pol, n, geometry, m, temp, quad = None):
	r""" :math:`\int_0^\infty \frac{k\,dk}{2\pi}\ln[1 - r_p^2(i\xi_n, k) e^{-2\kappa_n L}]`

	with :math:`\xi_n = 2\pi n k_BT`. The n = 0 term uses the static reflection
	coefficients and is exactly zero for TE in a dissipative Drude metal.

	Parameters
	----------
	pol: Polarization
	n: int
		Non-negative Matsubara index
	geometry: Geometry
	m: MaterialParams
	temp: Temperature
	quad: QuadratureConfig, optional

	Returns
	-------
	value: float
	error: float
		Absolute error estimate
	"""
	if quad is None:
		quad = QuadratureConfig()
	pol = Polarization(pol)
	n = int(n)
	if n < 0:
		raise DomainError("Matsubara index must be non-negative")
	L = geometry.L

	if n == 0:
		if pol is Polarization.TE and not m.lossless:
			return 0., 0.

		def f(k):
			r = static_reflection(pol, k, m)
			return k/(2*np.pi)*np.log1p(-r**2*np.exp(-2*k*L))

		cfg = quad.with_breakpoints([m.omega_p], 0, np.inf)
		return integrate(f, (0., np.inf), cfg, scale = 1/(2*L))

	xi = 2*np.pi*n*temp.t

	# k dk = kappa dkappa at fixed xi
	def g(kappa):
		return kappa/(2*np.pi)*_round_trip_log(pol, xi, kappa, L, m)

	cfg = quad.with_breakpoints([xi + m.omega_p], xi, np.inf)
	return integrate(g, (xi, np.inf), cfg, scale = 1/(2*L))


def _geometric_tail(terms):
	if len(terms) < 2 or terms[-2] == 0:
		return 0.
	rho = terms[-1]/terms[-2]
	if not 0 < rho < 1:
		return 0.
	return terms[-1]*rho/(1 - rho)


def free_energy_T(geometry, m, temp, quad = None, verbose = False):
	r""" Lifshitz free energy per area at positive temperature

	.. math::

		\frac{F}{A} = k_BT {\sum_{n \ge 0}}' \int_0^\infty \frac{k\,dk}{2\pi}
		\sum_p \ln\left[1 - r_p^2(i\xi_n, k) e^{-2\kappa_n L}\right]

	The n = 0 term carries weight 1/2. The sum stops once a term falls below
	1e-4 of the running sum and is completed with a geometric tail.

	Parameters
	----------
	geometry: Geometry
	m: MaterialParams
	temp: Temperature
		Positive temperature
	quad: QuadratureConfig, optional
	verbose: bool
		Print each Matsubara term

	Returns
	-------
	LifshitzBreakdown

	Raises
	------
	ConvergenceError
		When the sum has not settled after a million terms
	"""
	if quad is None:
		quad = QuadratureConfig()
	if not temp.t > 0:
		raise DomainError("the Matsubara sum needs a positive temperature")

	if verbose:
		printer = IterationPrinter(n = '7d', xi = '12.5e', te = '22.14e', tm = '22.14e', total = '22.14e')
		printer.print_header(n = 'n', xi = 'xi_n', te = 'TE term', tm = 'TM term', total = 'running sum')

	terms = {pol: [] for pol in Polarization}
	error = 0.
	n = 0
	while True:
		weight = 0.5 if n == 0 else 1.
		for pol in Polarization:
			value, err = matsubara_term(pol, n, geometry, m, temp, quad)
			terms[pol].append(weight*value)
			error += weight*err
		last = sum(terms[pol][-1] for pol in Polarization)
		running = math.fsum(terms[Polarization.TE] + terms[Polarization.TM])
		if verbose:
			printer.print_iter(n = n, xi = 2*np.pi*n*temp.t, te = terms[Polarization.TE][-1],
				tm = terms[Polarization.TM][-1], total = running)
		if n >= 1 and abs(last) <= _MATSUBARA_RTOL*abs(running):
			break
		n += 1
		if n >= _MATSUBARA_MAX_TERMS:
			raise ConvergenceError(f"Matsubara sum did not settle after {n} terms",
				value = temp.t*running, achieved_tol = abs(temp.t*last))

	parts = {pol: temp.t*(math.fsum(terms[pol]) + _geometric_tail(terms[pol])) for pol in Polarization}
	total = parts[Polarization.TE] + parts[Polarization.TM]
	error = temp.t*error
	return LifshitzBreakdown.from_parts(parts[Polarization.TE], parts[Polarization.TM], geometry,
		achieved_tol = error/abs(total) if total != 0 else error, matsubara_terms = n + 1)


def propagating_minus_eddy_check_TE(geometry, m, temp, quad = None):
	r""" Drude TE free energy relative to the magnitude of the classical TE eddy free energy

	In the classical regime the eddy currents cancel the zero-frequency TE term of the
	propagating modes, so the Drude TE free energy, which contains both, is close to 0.

	Raises
	------
	NoCutError
		For a lossless metal, which has no eddy currents
	"""
	if m.lossless:
		raise NoCutError("the check needs a dissipative metal")
	eddy = eddy_free_energy_highT(Polarization.TE, geometry, m, temp, quad)
	if eddy.value == 0:
		raise SingularityError("the eddy free energy underflowed")
	return free_energy_T(geometry, m, temp, quad).te/abs(eddy.value)
