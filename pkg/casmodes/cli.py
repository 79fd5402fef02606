r""" Command line interface: decomposition tables, parameter sweeps and built-in checks

Physical inputs (plasma frequency in rad/s or eV, separation in metres, temperature in
kelvin) are converted once into internal units; dimensionless inputs (L/lambda_p,
gamma/omega_p, k_B T/hbar omega_p) are used directly. Energies are reported in J/m^2
when a physical plasma frequency is configured and in units of hbar omega_p^3/c^2 otherwise.
"""

import argparse
import configparser
import csv
import logging
import sys
from concurrent import futures
from dataclasses import dataclass, fields, replace
import numpy as np
from iterprinter import IterationPrinter

from .version import __version__
from .util import NumericalError, SingularityError
from .params import MaterialParams, Geometry, CutoffLambda, Temperature, Units
from .quadrature import QuadratureConfig
from .decompose import decompose
from .checks import CHECKS, run_check

__all__ = [
	'ConfigError',
	'RunConfig',
	'GridSpec',
	'CSV_COLUMNS',
	'read_config',
	'write_config',
	'resolve',
	'cmd_decompose',
	'cmd_sweep',
	'cmd_check',
	'main',
	]

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
	'param_value',
	'E_ideal',
	'E_total',
	'E_total_TE',
	'E_total_TM',
	'E_plasmon',
	'E_plasmon_asym',
	'E_eddy_TE',
	'E_eddy_TM',
	'F_eddy_TE_highT',
	'F_plasma_TE_highT',
	'eta_total',
	'tol_achieved',
	'error_flag',
	]

SWEEP_PARAMETERS = ('L', 'T', 'gamma', 'Lambda')

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_CHECK_FAILED = 3


class ConfigError(ValueError):
	r""" Invalid run configuration, naming the offending field
	"""
	def __init__(self, field, message):
		self.field = field
		super().__init__(f"{field}: {message}" if field else message)


@dataclass(frozen = True)
class RunConfig:
	r""" Everything one CLI run needs

	Parameters
	----------
	omega_p: float
		Plasma frequency in ``energy_unit``
	gamma: float
		Damping rate in ``energy_unit``
	gamma_ratio: float
		Damping rate in units of the plasma frequency
	energy_unit: str
		'rad/s' or 'eV'
	model: str
		'drude' or 'plasma'
	distance: float
		Separation in metres
	distance_ratio: float
		Separation in units of the plasma wavelength
	temperature: float
		Temperature in kelvin
	temperature_ratio: float
		:math:`k_BT/\hbar\omega_p`
	cutoff_lambda: float
		Bath cutoff in units of gamma (of omega_p for a lossless metal)
	rel_tol: float
		Relative quadrature tolerance
	out: str
		Output path; standard output when None
	jobs: int
		Worker processes for sweeps
	"""
	omega_p: float = None
	gamma: float = None
	gamma_ratio: float = None
	energy_unit: str = 'rad/s'
	model: str = 'drude'
	distance: float = None
	distance_ratio: float = None
	temperature: float = None
	temperature_ratio: float = None
	cutoff_lambda: float = 10.
	rel_tol: float = 1e-9
	out: str = None
	jobs: int = 1

	def with_overrides(self, **kwargs):
		r""" Copy with every non-None keyword replacing the stored value
		"""
		return replace(self, **{key: val for key, val in kwargs.items() if val is not None})

	def validate(self):
		r""" Check field-level consistency

		Raises
		------
		ConfigError
		"""
		for name in ('omega_p', 'gamma_ratio', 'distance', 'distance_ratio', 'temperature_ratio',
				'cutoff_lambda', 'rel_tol'):
			val = getattr(self, name)
			if val is not None and not (np.isfinite(val) and val > 0):
				raise ConfigError(name, f"must be positive, got {val!r}")
		for name in ('gamma', 'temperature'):
			val = getattr(self, name)
			if val is not None and not (np.isfinite(val) and val >= 0):
				raise ConfigError(name, f"must be non-negative, got {val!r}")
		if self.energy_unit not in ('rad/s', 'eV'):
			raise ConfigError('energy_unit', f"must be 'rad/s' or 'eV', got {self.energy_unit!r}")
		if self.model not in ('drude', 'plasma'):
			raise ConfigError('model', f"must be 'drude' or 'plasma', got {self.model!r}")
		if (self.distance is None) == (self.distance_ratio is None):
			raise ConfigError('distance', "exactly one of distance (m) and distance_ratio (L/lambda_p) is required")
		if self.gamma is not None and self.gamma_ratio is not None:
			raise ConfigError('gamma', "give at most one of gamma and gamma_ratio")
		if self.temperature is not None and self.temperature_ratio is not None:
			raise ConfigError('temperature', "give at most one of temperature and temperature_ratio")
		for name in ('gamma', 'distance', 'temperature'):
			if getattr(self, name) is not None and self.omega_p is None:
				raise ConfigError(name, "a physical value needs omega_p")
		if self.model == 'plasma' and (self.gamma or self.gamma_ratio):
			raise ConfigError('model', "the plasma model is lossless; remove gamma")
		if int(self.jobs) < 1:
			raise ConfigError('jobs', "must be at least 1")
		return self


_SECTIONS = {
	'material': ('omega_p', 'gamma', 'gamma_ratio', 'energy_unit', 'model'),
	'geometry': ('distance', 'distance_ratio'),
	'thermal': ('temperature', 'temperature_ratio'),
	'modes': ('cutoff_lambda',),
	'quadrature': ('rel_tol',),
	'output': ('out', 'jobs'),
	}

_STRING_FIELDS = ('energy_unit', 'model', 'out')


def _format_value(val):
	if isinstance(val, float):
		return '%.17g' % val
	return str(val)


def _parse_value(name, text):
	if name in _STRING_FIELDS:
		return text
	try:
		if name == 'jobs':
			return int(text)
		return float(text)
	except ValueError:
		raise ConfigError(name, f"cannot parse {text!r} as a number")


def write_config(cfg, path):
	r""" Write a RunConfig as an INI file; unset fields are omitted
	"""
	parser = configparser.ConfigParser(interpolation = None)
	for section, names in _SECTIONS.items():
		values = {name: _format_value(getattr(cfg, name)) for name in names if getattr(cfg, name) is not None}
		if values:
			parser[section] = values
	with open(path, 'w', encoding = 'utf-8', newline = '\n') as f:
		parser.write(f)


def read_config(path, base = None):
	r""" Read an INI file written by :func:`write_config` (or by hand)

	Parameters
	----------
	path: str
	base: RunConfig, optional
		Values not present in the file

	Returns
	-------
	RunConfig
	"""
	parser = configparser.ConfigParser(interpolation = None)
	with open(path, encoding = 'utf-8') as f:
		parser.read_file(f)
	known = {f.name for f in fields(RunConfig)}
	values = {}
	for section in parser.sections():
		if section not in _SECTIONS:
			raise ConfigError(section, "unknown config section")
		for name, text in parser[section].items():
			if name not in known or name not in _SECTIONS[section]:
				raise ConfigError(name, f"unknown key in section [{section}]")
			values[name] = _parse_value(name, text)
	return replace(base if base is not None else RunConfig(), **values)


@dataclass(frozen = True)
class Resolved:
	m: MaterialParams
	geometry: Geometry
	cutoff: CutoffLambda
	temp: Temperature
	quad: QuadratureConfig
	units: Units


def resolve(cfg):
	r""" Convert a validated RunConfig to internal units

	Returns
	-------
	Resolved
		Material, geometry, cutoff, temperature (or None), quadrature settings and
		the SI conversion (None in dimensionless mode)
	"""
	cfg.validate()
	units = None
	if cfg.omega_p is not None:
		units = Units.from_electronvolt(cfg.omega_p) if cfg.energy_unit == 'eV' else Units(cfg.omega_p)

	if cfg.gamma_ratio is not None:
		gamma = cfg.gamma_ratio
	elif cfg.gamma is not None:
		# gamma and omega_p share a unit
		gamma = cfg.gamma/cfg.omega_p
	else:
		gamma = 0.
	if cfg.model == 'plasma':
		m = MaterialParams.plasma(1.)
	else:
		m = MaterialParams.drude(1., gamma)

	if cfg.distance_ratio is not None:
		geometry = Geometry.from_ratio(cfg.distance_ratio, m)
	else:
		geometry = Geometry(units.length_to_internal(cfg.distance))

	temp = None
	if cfg.temperature_ratio is not None:
		temp = Temperature(cfg.temperature_ratio)
	elif cfg.temperature is not None:
		temp = Temperature(units.temperature_to_internal(cfg.temperature))

	scale = m.gamma if m.gamma > 0 else m.omega_p
	cutoff = CutoffLambda(cfg.cutoff_lambda*scale)
	return Resolved(m, geometry, cutoff, temp, QuadratureConfig(rel_tol = cfg.rel_tol), units)


def _warn_validity(res):
	if res.temp is not None and 0 < res.temp.t < res.m.gamma:
		logger.warning("k_B T = %.3g hbar omega_p is below gamma = %.3g hbar omega_p; "
			"the classical eddy free energy is outside its range of validity", res.temp.t, res.m.gamma)


def _warn_tolerance(label, achieved_tol, rel_tol):
	if achieved_tol > rel_tol:
		logger.warning("%s: achieved relative error %.2e exceeds the requested %.2e", label, achieved_tol, rel_tol)


def _to_output(res, value):
	if value is None:
		return np.nan
	return res.units.energy_per_area_to_si(value) if res.units is not None else value


def cmd_decompose(cfg):
	r""" Print (and optionally write as CSV) the mode decomposition for one configuration

	Returns
	-------
	EnergyBreakdown
	"""
	res = resolve(cfg)
	_warn_validity(res)
	logger.info("material %s, L = %.6g c/omega_p (L/lambda_p = %.6g), Lambda = %.6g omega_p",
		res.m, res.geometry.L, res.geometry.ratio(res.m), res.cutoff.lambda_cut)
	breakdown = decompose(res.geometry, res.m, res.cutoff, res.temp, res.quad)
	unit = 'J/m^2' if res.units is not None else 'hbar omega_p^3/c^2'

	rows = breakdown.rows()
	print(f"energies per area in {unit}")
	printer = IterationPrinter(quantity = '24s', value = '24.16e', eta = '14.6e', tol = '9.2e', flag = '7s')
	printer.print_header(quantity = 'quantity', value = 'energy', eta = 'eta', tol = 'tol', flag = 'flag')
	for row in rows:
		printer.print_iter(quantity = row.label, value = _to_output(res, row.value), eta = row.eta,
			tol = row.achieved_tol, flag = row.flag)
	for row in rows:
		_warn_tolerance(row.label, row.achieved_tol, cfg.rel_tol)

	if cfg.out is not None:
		with open(cfg.out, 'w', encoding = 'utf-8', newline = '') as f:
			writer = csv.writer(f, lineterminator = '\n')
			writer.writerow(['quantity', 'value', 'eta', 'tol_achieved', 'flag'])
			for row in rows:
				writer.writerow([row.label, _format_value(float(_to_output(res, row.value))),
					_format_value(float(row.eta)), _format_value(float(row.achieved_tol)), row.flag])
		logger.info("decomposition written to %s", cfg.out)
	return breakdown


@dataclass(frozen = True)
class GridSpec:
	r""" Sweep grid ``lo:hi:n[:log|lin]`` with positive bounds and at least two points
	"""
	lo: float
	hi: float
	n: int
	spacing: str = 'log'

	def __post_init__(self):
		if not (self.lo > 0 and self.hi > 0 and np.isfinite(self.lo) and np.isfinite(self.hi)):
			raise ConfigError('grid', "bounds must be positive")
		if int(self.n) < 2:
			raise ConfigError('grid', "a sweep needs at least two points")
		if self.spacing not in ('log', 'lin'):
			raise ConfigError('grid', f"spacing must be 'log' or 'lin', got {self.spacing!r}")

	@classmethod
	def parse(cls, text):
		parts = text.split(':')
		if len(parts) not in (3, 4):
			raise ConfigError('grid', f"expected lo:hi:n[:log|lin], got {text!r}")
		try:
			lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
		except ValueError:
			raise ConfigError('grid', f"cannot parse {text!r}")
		return cls(lo, hi, n, *parts[3:])

	def values(self):
		if self.spacing == 'log':
			return np.geomspace(self.lo, self.hi, self.n)
		return np.linspace(self.lo, self.hi, self.n)


def _swept_field(cfg, param):
	r""" Name of the RunConfig field varied by a sweep parameter, in the units the config uses
	"""
	if param == 'L':
		return 'distance' if cfg.distance is not None else 'distance_ratio'
	if param == 'T':
		if cfg.temperature is not None or (cfg.temperature_ratio is None and cfg.omega_p is not None):
			return 'temperature'
		return 'temperature_ratio'
	if param == 'gamma':
		return 'gamma' if cfg.gamma is not None else 'gamma_ratio'
	if param == 'Lambda':
		return 'cutoff_lambda'
	raise ConfigError('param', f"must be one of {', '.join(SWEEP_PARAMETERS)}, got {param!r}")


def _sweep_row(task):
	r""" One CSV row; numerical failures are recorded in the error column
	"""
	cfg, value = task
	row = [value] + [np.nan]*(len(CSV_COLUMNS) - 3) + [np.nan, '']
	try:
		res = resolve(cfg)
		b = decompose(res.geometry, res.m, res.cutoff, res.temp, res.quad)
	except (NumericalError, SingularityError) as e:
		row[-1] = f"numerical: {e}"
		return row
	eddy_highT = b.eddy_te_highT.value if b.eddy_te_highT is not None else None
	energies = [b.ideal, b.lifshitz.total, b.lifshitz.te, b.lifshitz.tm, b.plasmon, b.plasmon_asymptotic,
		b.eddy_te.value, b.eddy_tm.value, eddy_highT, b.plasma_te_highT]
	row[1:11] = [_to_output(res, e) for e in energies]
	row[11] = b.lifshitz.eta
	row[12] = b.achieved_tol
	return row


def cmd_sweep(cfg, param, grid):
	r""" Evaluate the decomposition along a grid of one parameter and emit CSV

	Points are evaluated by up to ``cfg.jobs`` worker processes; rows are written
	in grid order.

	Parameters
	----------
	cfg: RunConfig
	param: str
		One of 'L', 'T', 'gamma', 'Lambda'
	grid: GridSpec or str

	Returns
	-------
	list of list
		The CSV rows without the header
	"""
	if isinstance(grid, str):
		grid = GridSpec.parse(grid)
	name = _swept_field(cfg, param)
	tasks = []
	for value in grid.values():
		point = replace(cfg, **{name: float(value)})
		if name == 'temperature':
			point = replace(point, temperature_ratio = None)
		point.validate()
		tasks.append((point, float(value)))
	if tasks:
		_warn_validity(resolve(tasks[0][0]))
	logger.info("sweeping %s over %d points with %d worker(s)", name, len(tasks), cfg.jobs)

	if cfg.jobs > 1:
		with futures.ProcessPoolExecutor(max_workers = cfg.jobs) as executor:
			rows = list(executor.map(_sweep_row, tasks))
	else:
		rows = [_sweep_row(task) for task in tasks]
	for row in rows:
		_warn_tolerance(f"{name} = {row[0]:g}", row[12], cfg.rel_tol)

	formatted = [[_format_value(float(x)) if not isinstance(x, str) else x for x in row] for row in rows]
	if cfg.out is not None:
		with open(cfg.out, 'w', encoding = 'utf-8', newline = '') as f:
			_write_csv(f, formatted)
		logger.info("sweep written to %s", cfg.out)
	else:
		_write_csv(sys.stdout, formatted)
	return rows


def _write_csv(f, rows):
	writer = csv.writer(f, lineterminator = '\n')
	writer.writerow(CSV_COLUMNS)
	writer.writerows(rows)


def cmd_check(name, quad = None):
	r""" Run a built-in check and print its report

	Returns
	-------
	CheckResult
	"""
	result = run_check(name, quad)
	print(result.report())
	return result


class _Parser(argparse.ArgumentParser):
	def error(self, message):
		raise ConfigError(None, message)


def _build_parser():
	common = argparse.ArgumentParser(add_help = False)
	common.add_argument('--config', help = "INI configuration file; flags override its values")
	common.add_argument('--omega-p', type = float, help = "plasma frequency in --energy-unit")
	common.add_argument('--gamma', type = float, help = "damping rate in --energy-unit")
	common.add_argument('--gamma-ratio', type = float, help = "damping rate in units of omega_p")
	common.add_argument('--energy-unit', choices = ['rad/s', 'eV'], help = "unit of --omega-p and --gamma")
	common.add_argument('--model', choices = ['drude', 'plasma'], help = "material model")
	common.add_argument('--distance', type = float, help = "separation in metres")
	common.add_argument('--distance-ratio', type = float, help = "separation in units of the plasma wavelength")
	common.add_argument('--temperature', type = float, help = "temperature in kelvin")
	common.add_argument('--temperature-ratio', type = float, help = "k_B T in units of hbar omega_p")
	common.add_argument('--cutoff-lambda', type = float, help = "bath cutoff in units of gamma (default 10)")
	common.add_argument('--rel-tol', type = float, help = "relative quadrature tolerance")
	common.add_argument('--out', help = "output CSV path")
	common.add_argument('--jobs', type = int, help = "worker processes for sweeps")
	common.add_argument('-v', '--verbose', action = 'count', default = 0, help = "increase verbosity (-v, -vv)")

	parser = _Parser(prog = 'casmodes', description = "Mode decomposition of the Casimir energy between metallic mirrors")
	parser.add_argument('--version', action = 'version', version = f'%(prog)s {__version__}')
	sub = parser.add_subparsers(dest = 'command', required = True)
	sub.add_parser('decompose', parents = [common], help = "table of mode contributions")
	sweep = sub.add_parser('sweep', parents = [common], help = "CSV sweep of one parameter")
	sweep.add_argument('param', choices = SWEEP_PARAMETERS)
	sweep.add_argument('grid', help = "lo:hi:n[:log|lin]")
	check = sub.add_parser('check', parents = [common], help = "run a built-in check")
	check.add_argument('name', choices = list(CHECKS))
	return parser


def _configure_logging(verbosity):
	level = max(logging.WARNING - 10*verbosity, logging.DEBUG)
	logging.basicConfig(level = level, format = "%(asctime)s - %(levelname)s - %(message)s")


def _load_config(args):
	cfg = RunConfig()
	if args.config is not None:
		cfg = read_config(args.config, cfg)
	overrides = {f.name: getattr(args, f.name, None) for f in fields(RunConfig)}
	return cfg.with_overrides(**overrides)


def main(argv = None):
	r""" Entry point of the ``casmodes`` command

	Returns
	-------
	int
		0 on success or PASS, 1 on usage errors, 2 on numerical failures, 3 on FAIL
	"""
	try:
		args = _build_parser().parse_args(argv)
	except ConfigError as e:
		print(f"casmodes: usage error: {e}", file = sys.stderr)
		return EXIT_USAGE
	_configure_logging(args.verbose)

	try:
		cfg = _load_config(args)
		if args.command == 'check':
			result = cmd_check(args.name, QuadratureConfig(rel_tol = cfg.rel_tol))
			return EXIT_OK if result.passed else EXIT_CHECK_FAILED
		cfg.validate()
		if args.command == 'decompose':
			cmd_decompose(cfg)
		else:
			cmd_sweep(cfg, args.param, args.grid)
	except ConfigError as e:
		logger.error("invalid configuration: %s", e)
		print(f"casmodes: usage error: {e}", file = sys.stderr)
		return EXIT_USAGE
	except OSError as e:
		logger.error("%s", e)
		return EXIT_USAGE
	except (NumericalError, SingularityError) as e:
		logger.error("numerical failure: %s", e)
		return EXIT_NUMERICAL
	return EXIT_OK


if __name__ == '__main__':
	sys.exit(main())
