r""" Adaptive Gauss-Kronrod quadrature and bracketed root finding
"""

from dataclasses import dataclass, replace
from enum import Enum
import numpy as np
import scipy.optimize
from iterprinter import IterationPrinter

from .util import DomainError, NumericalError, ConvergenceError, BracketError

__all__ = [
	'TailTransform',
	'QuadratureConfig',
	'gauss_kronrod',
	'integrate',
	'find_root_bracketed',
	]


# Non-negative Kronrod nodes on [-1, 1]; entries 1, 3, 5, 7 are the Gauss nodes
_XGK = np.array([
	0.991455371120812639206854697526329,
	0.949107912342758524526189684047851,
	0.864864423359769072789712788640926,
	0.741531185599394439863864773280788,
	0.586087235467691130294144845693013,
	0.405845151377397166906606412076961,
	0.207784955007898467600689403773245,
	0.000000000000000000000000000000000,
	])

_WGK = np.array([
	0.022935322010529224963732008058970,
	0.063092092629978553290700663189204,
	0.104790010322250183839876322541518,
	0.140653259715525918745189590510238,
	0.169004726639267902826583426598550,
	0.190350578064785409913256402421014,
	0.204432940075298892414161999234649,
	0.209482141084727828012999174891714,
	])

_WG = np.array([
	0.,
	0.129484966168869693270611432679082,
	0.,
	0.279705391489276667901467771423780,
	0.,
	0.381830050505118944950369775488975,
	0.,
	0.417959183673469387755102040816327,
	])

_NODES = np.hstack([-_XGK[:-1], _XGK[::-1]])
_KRONROD_WEIGHTS = np.hstack([_WGK[:-1], _WGK[::-1]])
_GAUSS_WEIGHTS = np.hstack([_WG[:-1], _WG[::-1]])

_EPS = np.finfo(float).eps
_UFLOW = np.finfo(float).tiny


class TailTransform(Enum):
	r""" Map of a semi-infinite interval [a, inf) onto [0, 1)

	EXP_DECAY uses :math:`x = a - s \log(1 - t)`, suited to integrands decaying like :math:`e^{-x/s}`;
	ALGEBRAIC_DECAY uses :math:`x = a + s t/(1-t)`, suited to power-law tails.
	"""
	EXP_DECAY = 'exp'
	ALGEBRAIC_DECAY = 'algebraic'


@dataclass(frozen = True)
class QuadratureConfig:
	r""" Tolerances and hints for :func:`integrate`

	Parameters
	----------
	rel_tol: float
		Requested relative accuracy
	abs_tol: float
		Absolute accuracy floor
	max_subdivisions: int
		Largest number of panels before giving up
	breakpoints: tuple of float
		Sorted interior points where the integrand is not smooth
	tail_transform: TailTransform
		Map used for semi-infinite domains
	initial_panels: int
		Number of equal panels each breakpoint-delimited segment starts with
	"""
	rel_tol: float = 1e-9
	abs_tol: float = 1e-14
	max_subdivisions: int = 2000
	breakpoints: tuple = ()
	tail_transform: TailTransform = TailTransform.EXP_DECAY
	initial_panels: int = 4

	def __post_init__(self):
		if not self.rel_tol > 0:
			raise DomainError(f"rel_tol must be positive, got {self.rel_tol!r}")
		if not self.abs_tol >= 0:
			raise DomainError(f"abs_tol must be non-negative, got {self.abs_tol!r}")
		if int(self.max_subdivisions) < 1 or int(self.initial_panels) < 1:
			raise DomainError("max_subdivisions and initial_panels must be positive")
		bp = tuple(float(x) for x in self.breakpoints)
		if not all(np.isfinite(bp)):
			raise DomainError("breakpoints must be finite")
		if any(x1 >= x2 for x1, x2 in zip(bp[:-1], bp[1:])):
			raise DomainError("breakpoints must be strictly increasing")
		object.__setattr__(self, 'breakpoints', bp)
		object.__setattr__(self, 'tail_transform', TailTransform(self.tail_transform))

	def with_breakpoints(self, points, lo = -np.inf, hi = np.inf):
		r""" Copy of this configuration whose breakpoints are the given points inside (lo, hi)
		"""
		points = sorted(set(float(x) for x in points if np.isfinite(x) and lo < x < hi))
		return replace(self, breakpoints = tuple(points))


def gauss_kronrod(f, a, b):
	r""" Apply the embedded 7-point Gauss / 15-point Kronrod pair on a batch of panels

	The error estimate follows QUADPACK's QK15.

	Parameters
	----------
	f: callable
		Vectorized integrand taking and returning 1-D arrays
	a: np.array (n,)
		Left panel endpoints
	b: np.array (n,)
		Right panel endpoints

	Returns
	-------
	result: np.array (n,)
		Kronrod estimate of the integral on each panel
	error: np.array (n,)
		Error estimate on each panel
	"""
	a = np.atleast_1d(np.asarray(a, dtype = float))
	b = np.atleast_1d(np.asarray(b, dtype = float))
	center = 0.5*(a + b)
	half = 0.5*(b - a)
	x = center[:,None] + half[:,None]*_NODES[None,:]
	fx = np.asarray(f(x.ravel()), dtype = float)
	fx = np.broadcast_to(fx, (x.size,)).reshape(x.shape)
	if not np.all(np.isfinite(fx)):
		raise NumericalError("integrand returned non-finite values")

	resk = fx @ _KRONROD_WEIGHTS
	resg = fx @ _GAUSS_WEIGHTS
	resabs = np.abs(fx) @ _KRONROD_WEIGHTS
	resasc = np.abs(fx - 0.5*resk[:,None]) @ _KRONROD_WEIGHTS

	result = resk*half
	abshalf = np.abs(half)
	resabs *= abshalf
	resasc *= abshalf
	error = np.abs((resk - resg)*half)

	with np.errstate(divide = 'ignore', invalid = 'ignore'):
		scaled = resasc*np.minimum(1., (200*error/resasc)**1.5)
	error = np.where((resasc != 0) & (error != 0), scaled, error)
	error = np.where(resabs > _UFLOW/(50*_EPS), np.maximum(50*_EPS*resabs, error), error)
	return result, error


def _semi_infinite(f, a, scale, transform):
	r""" Integrand and breakpoint map for [a, inf) pulled back to [0, 1)
	"""
	assert scale > 0, "scale must be positive"
	if transform is TailTransform.EXP_DECAY:
		def g(t):
			return f(a - scale*np.log1p(-t))*(scale/(1 - t))

		def to_t(x):
			return -np.expm1(-(x - a)/scale)
	else:
		def g(t):
			return f(a + scale*t/(1 - t))*(scale/(1 - t)**2)

		def to_t(x):
			return (x - a)/(x - a + scale)
	return g, to_t


def integrate(f, domain, cfg = None, scale = 1., verbose = False):
	r""" Adaptively integrate a real function over a finite or semi-infinite interval

	Panels are refined by bisection, worst error estimate first; all new panels
	of one pass are evaluated in a single vectorized call of ``f``.

	Parameters
	----------
	f: callable
		Vectorized integrand, finite on the open domain
	domain: tuple of float
		Integration limits (lo, hi); either may be infinite
	cfg: QuadratureConfig, optional
		Tolerances and breakpoints
	scale: float
		Length scale of the tail transform used on infinite limits
	verbose: bool
		If true, print the progress of each refinement pass

	Returns
	-------
	value: float
		Estimate of the integral
	achieved_tol: float
		Absolute error estimate of value

	Raises
	------
	ConvergenceError
		When the subdivision budget is exhausted; carries the best estimate
	"""
	if cfg is None:
		cfg = QuadratureConfig()

	lo, hi = (float(x) for x in domain)
	if np.isnan(lo) or np.isnan(hi):
		raise DomainError("integration limits must not be NaN")
	if lo == hi:
		return 0., 0.
	if lo > hi:
		value, err = integrate(f, (hi, lo), cfg, scale = scale, verbose = verbose)
		return -value, err

	for x in cfg.breakpoints:
		if not lo < x < hi:
			raise DomainError(f"breakpoint {x} is outside the domain ({lo}, {hi})")

	if np.isinf(lo) and np.isinf(hi):
		cfg_left = cfg.with_breakpoints([-x for x in cfg.breakpoints], 0, np.inf)
		cfg_right = cfg.with_breakpoints(cfg.breakpoints, 0, np.inf)
		v1, e1 = integrate(lambda x: f(-x), (0., np.inf), cfg_left, scale = scale, verbose = verbose)
		v2, e2 = integrate(f, (0., np.inf), cfg_right, scale = scale, verbose = verbose)
		return v1 + v2, e1 + e2

	if np.isinf(lo):
		cfg_ref = cfg.with_breakpoints([-x for x in cfg.breakpoints])
		return integrate(lambda x: f(-x), (-hi, np.inf), cfg_ref, scale = scale, verbose = verbose)

	if np.isinf(hi):
		g, to_t = _semi_infinite(f, lo, scale, cfg.tail_transform)
		t_lo, t_hi = 0., 1.
		# far breakpoints can round onto the end of the mapped interval
		points = sorted(set(t for t in (to_t(x) for x in cfg.breakpoints) if t_lo < t < t_hi))
	else:
		g = f
		points = list(cfg.breakpoints)
		t_lo, t_hi = lo, hi

	edges = np.array([t_lo] + points + [t_hi])
	npan = int(cfg.initial_panels)
	a = np.hstack([np.linspace(x1, x2, npan + 1)[:-1] for x1, x2 in zip(edges[:-1], edges[1:])])
	b = np.hstack([np.linspace(x1, x2, npan + 1)[1:] for x1, x2 in zip(edges[:-1], edges[1:])])
	res, err = gauss_kronrod(g, a, b)

	if verbose:
		printer = IterationPrinter(it = '4d', panels = '6d', value = '22.15e', error = '10.3e')
		printer.print_header(it = 'pass', panels = 'panels', value = 'integral', error = 'error est')

	it = 0
	while True:
		value = float(np.sum(res))
		error = float(np.sum(err))
		tol = max(cfg.rel_tol*abs(value), cfg.abs_tol)
		if verbose:
			printer.print_iter(it = it, panels = len(a), value = value, error = error)
		if error <= tol:
			return value, error

		budget = int(cfg.max_subdivisions) - len(a)
		width = b - a
		splittable = width > 64*_EPS*np.maximum(np.abs(a), np.abs(b)) + _UFLOW
		order = np.argsort(-err, kind = 'stable')
		order = order[splittable[order]]
		if budget <= 0 or len(order) == 0:
			raise ConvergenceError(
				f"quadrature did not converge with {len(a)} panels: estimate {value:.16e}, error {error:.3e}",
				value = value, achieved_tol = error)

		# Smallest set of worst panels whose error exceeds the excess over the tolerance
		cum = np.cumsum(err[order])
		nsplit = int(np.searchsorted(cum, error - tol)) + 1
		idx = order[:min(nsplit, len(order), budget)]

		mid = 0.5*(a[idx] + b[idx])
		new_a = np.hstack([a[idx], mid])
		new_b = np.hstack([mid, b[idx]])
		new_res, new_err = gauss_kronrod(g, new_a, new_b)

		keep = np.ones(len(a), dtype = bool)
		keep[idx] = False
		a = np.hstack([a[keep], new_a])
		b = np.hstack([b[keep], new_b])
		res = np.hstack([res[keep], new_res])
		err = np.hstack([err[keep], new_err])

		# Keep panels in order of position so summation order depends only on the panels
		order = np.argsort(a, kind = 'stable')
		a, b, res, err = a[order], b[order], res[order], err[order]
		it += 1


def find_root_bracketed(g, lo, hi, tol = 1e-12, maxiter = 200):
	r""" Find a root of a continuous function inside a sign-changing bracket

	Parameters
	----------
	g: callable
		Scalar function
	lo, hi: float
		Bracket with g(lo)*g(hi) < 0
	tol: float
		Absolute tolerance on the root location
	maxiter: int
		Iteration limit of Brent's method

	Returns
	-------
	float
		The root

	Raises
	------
	BracketError
		When g does not change sign on [lo, hi]
	ConvergenceError
		When Brent's method does not converge
	"""
	glo = float(g(lo))
	ghi = float(g(hi))
	if glo == 0:
		return float(lo)
	if ghi == 0:
		return float(hi)
	if not (np.isfinite(glo) and np.isfinite(ghi)) or np.sign(glo) == np.sign(ghi):
		raise BracketError(f"no sign change on [{lo}, {hi}]: g(lo) = {glo}, g(hi) = {ghi}")

	x, info = scipy.optimize.brentq(g, lo, hi, xtol = tol, rtol = 4*_EPS, maxiter = maxiter,
		full_output = True, disp = False)
	if not info.converged:
		raise ConvergenceError(f"root finding stopped after {info.iterations} iterations", value = x)
	return x
