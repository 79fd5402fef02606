r""" Coupled surface plasmons with damping and their contribution to the Casimir energy

In the quasi-static limit the two surface plasmons of facing mirrors hybridize into

.. math::

	\omega_\pm^2 = \frac{\omega_p^2}{2}(1 \pm e^{-kL}), \qquad
	\Omega_\pm = \sqrt{\omega_\pm^2 - \gamma^2/4} - i\gamma/2 .

When :math:`\omega_\pm^2 < \gamma^2/4` the branch is overdamped and splits into two
purely imaginary modes, each counted with weight 1/2.
"""

from dataclasses import dataclass
import numpy as np

from .util import DomainError, ZETA3, PURELY_IMAGINARY_ATOL
from .params import ComplexFrequency, Geometry
from .quadrature import QuadratureConfig, integrate

__all__ = [
	'ALPHA',
	'PlasmonPair',
	'quasistatic_frequencies',
	'overdamping_threshold',
	'overdamping_thresholds',
	'mode_term',
	'plasmon_integrand',
	'plasmon_energy',
	'plasmon_energy_asymptotic',
	'sum_rule_residual',
	]

# Coefficient of the leading short-distance plasmon energy
ALPHA = 1.193


@dataclass(frozen = True)
class PlasmonPair:
	r""" The two coupled plasmon branches at lateral wavevector k and separation L

	For an overdamped branch ``omega_plus`` (or ``omega_minus``) holds the fast root
	:math:`-i(\gamma/2 + s)` and the matching ``*_partner`` field the slow root
	:math:`-i(\gamma/2 - s)`, :math:`s = \sqrt{\gamma^2/4 - \omega^2}`.
	"""
	omega_plus: ComplexFrequency
	omega_minus: ComplexFrequency
	overdamped_minus: bool
	k: float
	L: float
	omega_plus_partner: ComplexFrequency = None
	omega_minus_partner: ComplexFrequency = None

	@property
	def overdamped_plus(self):
		return self.omega_plus_partner is not None

	def modes(self):
		r""" All mode frequencies of the pair

		Returns
		-------
		list of ComplexFrequency
			Underdamped branches contribute one frequency, overdamped ones two
		"""
		return [w for w in (self.omega_plus, self.omega_plus_partner, self.omega_minus, self.omega_minus_partner)
			if w is not None]


def _is_underdamped(omega2, gamma):
	disc = omega2 - 0.25*gamma**2
	return (gamma == 0) | (disc > PURELY_IMAGINARY_ATOL**2)


def _branch_roots(omega2, gamma):
	r""" Damped roots of :math:`\Omega^2 + i\gamma\Omega - \omega^2 = 0` in the lower half plane
	"""
	if _is_underdamped(omega2, gamma):
		return ComplexFrequency(complex(np.sqrt(omega2 - 0.25*gamma**2), -0.5*gamma)), None
	s = np.sqrt(max(0.25*gamma**2 - omega2, 0.))
	fast = 0.5*gamma + s
	# product of the roots is omega^2, which keeps the slow root accurate
	slow = omega2/fast
	return ComplexFrequency(complex(0., -fast), True), ComplexFrequency(complex(0., -slow), True)


def _branch_frequencies(k, L, m):
	r""" :math:`(\omega_+^2, \omega_-^2)`; L may be infinite
	"""
	half = 0.5*m.omega_p**2
	if np.isinf(L):
		return half, half
	return half*(1 + np.exp(-k*L)), -half*np.expm1(-k*L)


def quasistatic_frequencies(k, L, m):
	r""" Quasi-static coupled plasmon frequencies with damping

	Parameters
	----------
	k: float
		Lateral wavevector, positive
	L: float or Geometry
		Separation; ``np.inf`` gives the isolated-interface reference
	m: MaterialParams
		Material

	Returns
	-------
	PlasmonPair
	"""
	if isinstance(L, Geometry):
		L = L.L
	k = float(k)
	L = float(L)
	if not k > 0:
		raise DomainError(f"k must be positive, got {k!r}")
	if not L > 0:
		raise DomainError(f"L must be positive, got {L!r}")

	omega2_plus, omega2_minus = _branch_frequencies(k, L, m)
	plus, plus_partner = _branch_roots(omega2_plus, m.gamma)
	minus, minus_partner = _branch_roots(omega2_minus, m.gamma)
	return PlasmonPair(plus, minus, minus_partner is not None, k, L,
		omega_plus_partner = plus_partner, omega_minus_partner = minus_partner)


def overdamping_thresholds(geometry, m):
	r""" Wavevectors at which either branch changes between underdamped and overdamped

	Parameters
	----------
	geometry: Geometry
	m: MaterialParams

	Returns
	-------
	list of float
		Sorted thresholds; empty for a lossless metal
	"""
	if m.lossless:
		return []
	L = geometry.L
	ratio = m.gamma**2/(2*m.omega_p**2)
	thresholds = []
	# minus branch: (w_p^2/2)(1 - exp(-kL)) = gamma^2/4
	if ratio < 1:
		thresholds.append(-np.log1p(-ratio)/L)
	# plus branch: (w_p^2/2)(1 + exp(-kL)) = gamma^2/4
	if 1 < ratio < 2:
		thresholds.append(-np.log(ratio - 1)/L)
	return sorted(thresholds)


def overdamping_threshold(geometry, m):
	r""" Wavevector :math:`k^*` below which the minus branch is overdamped

	Solves :math:`(\omega_p^2/2)(1 - e^{-k^* L}) = \gamma^2/4` in closed form.

	Returns
	-------
	float
		0 for a lossless metal, ``np.inf`` when the minus branch is overdamped at every k
	"""
	if m.lossless:
		return 0.
	ratio = m.gamma**2/(2*m.omega_p**2)
	if ratio >= 1:
		return np.inf
	return -np.log1p(-ratio)/geometry.L


def _mode_value(omega, cutoff):
	r""" :math:`\frac{1}{2}\mathrm{Re}[\omega - (2i\omega/\pi) \ln(\omega/\Lambda)]` with the principal log
	"""
	omega = np.asarray(omega, dtype = complex)
	return 0.5*np.real(omega - (2j*omega/np.pi)*np.log(omega/cutoff.lambda_cut))


def mode_term(omega, cutoff):
	r""" Contribution of one mode to the energy, including the weight of purely imaginary modes

	.. math::

		w \cdot \frac{1}{2} \mathrm{Re}\left[\omega - \frac{2i\omega}{\pi} \ln\frac{\omega}{\Lambda}\right]

	with :math:`w = 1/2` for purely imaginary frequencies and 1 otherwise. For
	:math:`\omega = -i\xi` this equals :math:`-\frac{\xi}{2\pi}\ln(\xi/\Lambda)`.

	Parameters
	----------
	omega: ComplexFrequency
	cutoff: CutoffLambda

	Returns
	-------
	float
	"""
	if omega.value == 0:
		raise DomainError("mode_term is undefined at zero frequency")
	return omega.weight*float(_mode_value(omega.value, cutoff))


def _branch_terms(omega2, gamma, cutoff):
	r""" Vectorized sum of :func:`mode_term` over the roots of one branch
	"""
	omega2 = np.asarray(omega2, dtype = float)
	disc = omega2 - 0.25*gamma**2
	under = _is_underdamped(omega2, gamma)
	with np.errstate(divide = 'ignore', invalid = 'ignore'):
		damped = np.sqrt(np.maximum(disc, 0.)) - 0.5j*gamma
		s = np.sqrt(np.maximum(-disc, 0.))
		fast = 0.5*gamma + s
		slow = np.where(under, 1., omega2/fast)
		fast = np.where(under, 1., fast)
		over = 0.5*(_mode_value(-1j*fast, cutoff) + _mode_value(-1j*slow, cutoff))
		value = np.where(under, _mode_value(np.where(under, damped, 1.), cutoff), over)
	return value


def plasmon_integrand(k, geometry, m, cutoff):
	r""" :math:`\frac{k}{2\pi}\sum_\pm [\text{mode terms}]^L_\infty` as a function of k

	Parameters
	----------
	k: np.array
		Lateral wavevectors, positive
	geometry: Geometry
	m: MaterialParams
	cutoff: CutoffLambda

	Returns
	-------
	np.array
	"""
	k = np.asarray(k, dtype = float)
	L = geometry.L
	half = 0.5*m.omega_p**2
	omega2_plus = half*(1 + np.exp(-k*L))
	omega2_minus = -half*np.expm1(-k*L)
	reference = 2*_branch_terms(half, m.gamma, cutoff)
	bracket = _branch_terms(omega2_plus, m.gamma, cutoff) + _branch_terms(omega2_minus, m.gamma, cutoff) - reference
	return k/(2*np.pi)*bracket


def plasmon_energy(geometry, m, cutoff, quad = None, verbose = False, full_output = False):
	r""" Plasmonic contribution to the Casimir energy per area

	.. math::

		E_\mathrm{pl} = \int_0^\infty \frac{k\,dk}{2\pi} \sum_{i=\pm}
		\left[\text{mode\_term}(\Omega_i(k; L)) - \text{mode\_term}(\Omega_i(k; \infty))\right]

	The integral is split at the overdamping thresholds.

	Parameters
	----------
	geometry: Geometry
	m: MaterialParams
	cutoff: CutoffLambda
	quad: QuadratureConfig, optional
	verbose: bool
		Print quadrature progress
	full_output: bool
		If true, also return the absolute error estimate

	Returns
	-------
	value: float
	achieved_tol: float
		Only if full_output is true
	"""
	if quad is None:
		quad = QuadratureConfig()
	L = geometry.L
	cfg = quad.with_breakpoints(overdamping_thresholds(geometry, m), 0, np.inf)
	value, err = integrate(lambda k: plasmon_integrand(k, geometry, m, cutoff), (0., np.inf), cfg,
		scale = 1/(2*L), verbose = verbose)
	if full_output:
		return value, err
	return value


def plasmon_energy_asymptotic(geometry, m):
	r""" Short-distance plasmon energy with its first dissipative correction

	.. math::

		-\frac{\pi^2}{720 L^3}\frac{3}{2}\left(\alpha\frac{L}{\lambda_p}
		- \frac{15\zeta(3)}{\pi^4}\gamma L\right), \qquad \alpha = 1.193
	"""
	L = geometry.L
	if not L > 0:
		raise DomainError("L must be positive")
	return -np.pi**2/(720*L**3)*1.5*(ALPHA*L/m.lambda_p - 15*ZETA3/np.pi**4*m.gamma*L)


def sum_rule_residual(k, geometry, m):
	r""" Imaginary part of the weighted sum of plasmon frequencies at L minus that at infinity

	Each configuration contributes :math:`-\gamma` in total, so the residual vanishes.

	Returns
	-------
	float
	"""
	at_L = quasistatic_frequencies(k, geometry.L, m)
	at_inf = quasistatic_frequencies(k, np.inf, m)
	total = lambda pair: sum(w.weight*w.value.imag for w in pair.modes())
	return total(at_L) - total(at_inf)
