r""" Drude permittivity and Fresnel reflection at complex frequency

The metal fills a half-space; the normal wavenumbers in vacuum and in the metal are

.. math::

	k_z = \sqrt{\omega^2 - k^2}, \qquad k_m = \sqrt{\varepsilon(\omega)\omega^2 - k^2},

both taken on the branch with non-negative imaginary part. On the negative imaginary
axis, between :math:`-i\xi_0(k)` and :math:`-i\gamma`, :math:`k_m^2` is real and positive
and the two sides of the axis carry opposite signs of :math:`k_m`: this is the eddy-current cut.
"""

from dataclasses import dataclass
from enum import Enum
import numpy as np

from .util import DomainError, SingularityError, NoCutError, decaying_sqrt, richardson
from .quadrature import find_root_bracketed

__all__ = [
	'Polarization',
	'BranchSide',
	'EvaluationPoint',
	'epsilon',
	'vacuum_wavenumber',
	'medium_wavenumber',
	'fresnel_r',
	'static_reflection',
	'cut_intervals',
	'cut_endpoints',
	'log_mode_function',
	'cut_phase',
	'cut_phase_offset',
	]

# Tolerance for snapping the imaginary part of quantities that are real on the positive imaginary axis
_REALITY_ATOL = 1e-13


class Polarization(Enum):
	TE = 'TE'
	TM = 'TM'


class BranchSide(Enum):
	r""" Which limit to take when the frequency lies on the eddy-current cut

	ON_AXIS evaluates at the given frequency with the decaying branch of :math:`k_m`;
	CUT_LEFT takes the limit :math:`\omega \to -i\xi - 0^+` from the left half plane.
	"""
	ON_AXIS = 'on-axis'
	CUT_LEFT = 'cut-left'


@dataclass(frozen = True, eq = False)
class EvaluationPoint:
	r""" Frequency, lateral wavevector and branch side, broadcast against each other

	Parameters
	----------
	omega: complex or array-like
		Frequency
	k: float or array-like
		Lateral wavevector magnitude
	side: BranchSide
		Branch-side selector
	"""
	omega: np.ndarray
	k: np.ndarray
	side: BranchSide = BranchSide.ON_AXIS

	def __post_init__(self):
		omega, k = np.broadcast_arrays(np.asarray(self.omega, dtype = complex), np.asarray(self.k, dtype = float))
		if np.any(k < 0) or not np.all(np.isfinite(k)):
			raise DomainError("k must be finite and non-negative")
		side = BranchSide(self.side)
		if side is BranchSide.CUT_LEFT and not (np.all(omega.real == 0) and np.all(omega.imag < 0)):
			raise DomainError("a cut-side point must lie on the negative imaginary axis")
		object.__setattr__(self, 'omega', omega)
		object.__setattr__(self, 'k', k)
		object.__setattr__(self, 'side', side)

	@classmethod
	def imaginary_axis(cls, xi, k):
		r""" Point :math:`\omega = i\xi` on the positive imaginary axis
		"""
		return cls(1j*np.asarray(xi, dtype = float), k)

	@classmethod
	def cut(cls, xi, k):
		r""" Point :math:`\omega = -i\xi - 0^+` approached from the left half plane
		"""
		return cls(-1j*np.asarray(xi, dtype = float), k, BranchSide.CUT_LEFT)

	@property
	def xi(self):
		r""" :math:`\xi = |\mathrm{Im}\,\omega|` for points on the imaginary axis
		"""
		return np.abs(self.omega.imag)


def _scalar(x):
	return x[()] if isinstance(x, np.ndarray) and x.ndim == 0 else x


def epsilon(omega, m):
	r""" Drude permittivity :math:`1 - \omega_p^2/(\omega(\omega + i\gamma))`

	Parameters
	----------
	omega: complex or array-like
		Frequency
	m: MaterialParams
		Material

	Returns
	-------
	complex or np.ndarray
		The permittivity, real for frequencies on the imaginary axis
	"""
	omega = np.asarray(omega, dtype = complex)
	denom = omega*(omega + 1j*m.gamma)
	if np.any(denom == 0):
		raise SingularityError("the Drude permittivity has poles at omega = 0 and omega = -i gamma")
	eps = 1 - m.omega_p**2/denom
	on_axis = (omega.real == 0)
	eps = np.where(on_axis, eps.real + 0j, eps)
	return _scalar(eps)


def vacuum_wavenumber(pt):
	r""" Normal wavenumber :math:`k_z` in the gap, decaying branch
	"""
	on_axis = pt.omega.real == 0
	kz = decaying_sqrt(pt.omega**2 - pt.k**2)
	# i*sqrt(xi^2 + k^2) exactly on the imaginary axis
	kz = np.where(on_axis, 1j*np.hypot(pt.omega.imag, pt.k), kz)
	return _scalar(kz)


def _cut_km2(xi, k, m):
	r""" Real value of :math:`k_m^2` at :math:`\omega = -i\xi`
	"""
	return np.real(epsilon(-1j*xi, m))*(-xi**2) - k**2


def medium_wavenumber(pt, m):
	r""" Normal wavenumber :math:`k_m` inside the metal

	Away from the cut the root with :math:`\mathrm{Im}\, k_m \ge 0` is returned.
	For points with side CUT_LEFT, :math:`k_m^2` is evaluated as a real number and,
	where it is positive, the limit from the left half plane is the negative root
	:math:`k_m = -\sqrt{k_m^2}`; elsewhere on the axis :math:`k_m = i\sqrt{-k_m^2}`.

	Parameters
	----------
	pt: EvaluationPoint
		Where to evaluate
	m: MaterialParams
		Material

	Returns
	-------
	complex or np.ndarray
	"""
	if pt.side is BranchSide.CUT_LEFT:
		km2 = _cut_km2(pt.xi, pt.k, m)
		root = np.sqrt(np.abs(km2))
		km = np.where(km2 > 0, -root + 0j, 1j*root)
		return _scalar(km)

	eps = np.asarray(epsilon(pt.omega, m))
	km2 = eps*pt.omega**2 - pt.k**2
	on_axis = pt.omega.real == 0
	km2 = np.where(on_axis, km2.real + 0j, km2)
	return _scalar(decaying_sqrt(km2))


def fresnel_r(pol, pt, m):
	r""" Fresnel reflection coefficient of the vacuum/metal interface

	.. math::

		r_\mathrm{TE} = \frac{k_z - k_m}{k_z + k_m}, \qquad
		r_\mathrm{TM} = \frac{\varepsilon k_z - k_m}{\varepsilon k_z + k_m}

	Parameters
	----------
	pol: Polarization
		TE or TM
	pt: EvaluationPoint
		Where to evaluate
	m: MaterialParams
		Material

	Returns
	-------
	complex or np.ndarray
		The reflection coefficient; real on the positive imaginary axis
	"""
	pol = Polarization(pol)
	kz = np.asarray(vacuum_wavenumber(pt))
	km = np.asarray(medium_wavenumber(pt, m))
	if pol is Polarization.TE:
		num = kz - km
		den = kz + km
	else:
		eps = np.asarray(epsilon(pt.omega, m))
		num = eps*kz - km
		den = eps*kz + km
	if np.any(den == 0):
		raise SingularityError(f"vanishing {pol.value} Fresnel denominator")
	r = num/den

	upper_axis = (pt.omega.real == 0) & (pt.omega.imag > 0)
	snap = upper_axis & (np.abs(r.imag) <= _REALITY_ATOL*np.maximum(1., np.abs(r)))
	r = np.where(snap, r.real + 0j, r)
	return _scalar(r)


def static_reflection(pol, k, m):
	r""" Reflection coefficient in the limit :math:`\omega \to 0` at fixed k

	For a dissipative Drude metal :math:`r_\mathrm{TE} \to 0`; in the lossless case
	:math:`r_\mathrm{TE} \to (k - \sqrt{k^2 + \omega_p^2})/(k + \sqrt{k^2 + \omega_p^2})`.
	:math:`r_\mathrm{TM} \to 1` in both models.

	Parameters
	----------
	pol: Polarization
		TE or TM
	k: float or array-like
		Lateral wavevector
	m: MaterialParams
		Material

	Returns
	-------
	float or np.ndarray
	"""
	pol = Polarization(pol)
	k = np.asarray(k, dtype = float)
	if pol is Polarization.TM:
		return _scalar(np.ones_like(k))
	if not m.lossless:
		return _scalar(np.zeros_like(k))
	root = np.hypot(k, m.omega_p)
	# (k - root)/(k + root) without cancellation
	return _scalar(-m.omega_p**2/(k + root)**2)


def cut_intervals(k, m, tol = None):
	r""" Pieces of the negative imaginary axis occupied by the eddy-current cut

	The cut is where :math:`k_m^2 = -\xi^2 + \omega_p^2 \xi/(\gamma - \xi) - k^2 > 0`
	for :math:`0 < \xi < \gamma`. Cleared of the pole this is the sign of the cubic
	:math:`\xi^3 - \gamma\xi^2 + (\omega_p^2 + k^2)\xi - \gamma k^2`, which has one
	root in :math:`(0, \gamma)` unless :math:`\gamma^2 > 3(\omega_p^2 + k^2)`; then it
	may have three and the cut splits in two.

	Parameters
	----------
	k: float
		Lateral wavevector
	m: MaterialParams
		Material, with gamma > 0
	tol: float, optional
		Absolute tolerance on the interior endpoints

	Returns
	-------
	list of (float, float)
		Disjoint intervals in increasing order; the last one ends at gamma
	"""
	if m.lossless:
		raise NoCutError("a lossless metal has no eddy-current cut")
	k = float(k)
	if k < 0:
		raise DomainError("k must be non-negative")
	gamma = m.gamma
	a = m.omega_p**2 + k**2

	if k == 0:
		# xi = 0 is a root; the remaining quadratic opens a gap for gamma > 2 omega_p
		disc = gamma**2 - 4*a
		if disc <= 0:
			return [(0., gamma)]
		s = np.sqrt(disc)
		return [(0., (gamma - s)/2), ((gamma + s)/2, gamma)]

	def h(xi):
		return ((xi - gamma)*xi + a)*xi - gamma*k**2

	points = [0.]
	disc = gamma**2 - 3*a
	if disc > 0:
		s = np.sqrt(disc)
		points += [(gamma - s)/3, (gamma + s)/3]
	points.append(gamma)

	guess = gamma*k**2/a
	roots = []
	for lo, hi in zip(points[:-1], points[1:]):
		if np.sign(h(lo))*np.sign(h(hi)) < 0:
			if tol is not None:
				xtol = tol
			elif not roots:
				xtol = max(1e-14*guess, np.finfo(float).tiny)
			else:
				xtol = 1e-14*gamma
			roots.append(find_root_bracketed(h, lo, hi, tol = xtol))

	# h(0) < 0 < h(gamma): an odd number of sign changes
	edges = roots + [gamma]
	return [(edges[i], edges[i + 1]) for i in range(0, len(edges), 2)]


def cut_endpoints(k, m, tol = None):
	r""" Outer ends of the eddy-current cut at lateral wavevector k

	The cut lies within :math:`\xi \in (\xi_0(k), \gamma)` on the negative imaginary axis,
	where :math:`\xi_0` is the smallest root of :math:`-\xi^2 + \omega_p^2 \xi/(\gamma - \xi) = k^2`
	in :math:`(0, \gamma)`. For :math:`k \ll \omega_p`, :math:`\xi_0 \approx D k^2`.
	For strongly damped metals, :math:`\gamma^2 > 3(\omega_p^2 + k^2)`, the interval can
	contain a gap where :math:`k_m^2 < 0`; :func:`cut_intervals` resolves it.

	Parameters
	----------
	k: float
		Lateral wavevector
	m: MaterialParams
		Material, with gamma > 0
	tol: float, optional
		Absolute tolerance on the lower endpoint

	Returns
	-------
	xi_low: float
	xi_high: float
		Equal to gamma
	"""
	intervals = cut_intervals(k, m, tol = tol)
	return intervals[0][0], m.gamma


def log_mode_function(pol, pt, L, m):
	r""" :math:`\ln[1 - r_p^2 e^{2 i k_z L}]`, the logarithm of the round-trip mode function

	On the positive imaginary axis :math:`e^{2ik_zL} = e^{-2\kappa L}` and the result is real.

	Parameters
	----------
	pol: Polarization
	pt: EvaluationPoint
	L: float
		Separation
	m: MaterialParams

	Returns
	-------
	complex or np.ndarray
	"""
	r = np.asarray(fresnel_r(pol, pt, m))
	kz = np.asarray(vacuum_wavenumber(pt))
	return _scalar(np.log(1 - r**2*np.exp(2j*kz*L)))


def cut_phase(pol, xi, k, L, m):
	r""" :math:`\mathrm{Im} \ln[1 - r_p^2(-i\xi - 0^+) e^{-2\kappa L}]` on the eddy-current cut

	The phase vanishes off the cut, where the reflection coefficient is real.

	Parameters
	----------
	pol: Polarization
	xi: array-like
		Positive decay rates
	k: array-like
		Lateral wavevectors, broadcast against xi
	L: float
		Separation
	m: MaterialParams

	Returns
	-------
	np.ndarray
	"""
	pt = EvaluationPoint.cut(xi, k)
	r = np.asarray(fresnel_r(pol, pt, m))
	kappa = np.hypot(pt.xi, pt.k)
	return np.angle(1 - r**2*np.exp(-2*kappa*L))


def cut_phase_offset(pol, xi, k, L, m, offset = 1e-8, levels = 2):
	r""" Numerical-offset evaluation of :func:`cut_phase`

	Evaluates :math:`\mathrm{Im} \ln[1 - r_p^2 e^{2ik_zL}]` at :math:`\omega = -i\xi - \delta`
	with the decaying branches and extrapolates :math:`\delta \to 0` with Richardson's method.
	This is an independent check of the side limit taken by :func:`cut_phase`.

	Parameters
	----------
	pol: Polarization
	xi: array-like
	k: array-like
	L: float
	m: MaterialParams
	offset: float
		Largest distance from the imaginary axis
	levels: int
		Number of Richardson halvings

	Returns
	-------
	np.ndarray
	"""
	xi = np.asarray(xi, dtype = float)

	def phase(delta):
		pt = EvaluationPoint(-1j*xi - delta, k)
		r = np.asarray(fresnel_r(pol, pt, m))
		kz = np.asarray(vacuum_wavenumber(pt))
		return np.angle(1 - r**2*np.exp(2j*kz*L))

	return richardson(phase, offset, levels = levels)
