r""" Decomposition of the Casimir energy into plasmon, eddy-current and remaining contributions
"""

from dataclasses import dataclass

from .params import ideal_casimir_energy_per_area
from .quadrature import QuadratureConfig
from .reflection import Polarization
from .plasmon import plasmon_energy, plasmon_energy_asymptotic
from .eddy import eddy_energy_T0, eddy_free_energy_highT, plasma_highT_reference
from .lifshitz import casimir_energy_T0

__all__ = [
	'EnergyRow',
	'EnergyBreakdown',
	'decompose',
	]


@dataclass(frozen = True)
class EnergyRow:
	r""" One line of a decomposition table
	"""
	label: str
	value: float
	eta: float
	achieved_tol: float = 0.
	flag: str = ''


@dataclass(frozen = True)
class EnergyBreakdown:
	r""" Mode-resolved Casimir energies per area at one separation

	The part of the Lifshitz total not carried by plasmons or eddy currents is
	reported as :attr:`remainder`; it contains the propagating cavity modes.

	Parameters
	----------
	ideal: float
		Perfect-mirror energy
	lifshitz: LifshitzBreakdown
		Zero-temperature Lifshitz energy
	plasmon: float
	plasmon_tol: float
		Relative error estimate of plasmon
	plasmon_asymptotic: float
	eddy_te, eddy_tm: EddyResult
		Zero-temperature eddy-current energies
	eddy_te_highT, eddy_tm_highT: EddyResult
		Classical eddy free energies, when a temperature is given
	plasma_te_highT: float
		Zero-frequency TE term of the plasma model, when a temperature is given
	"""
	ideal: float
	lifshitz: object
	plasmon: float
	plasmon_tol: float
	plasmon_asymptotic: float
	eddy_te: object
	eddy_tm: object
	eddy_te_highT: object = None
	eddy_tm_highT: object = None
	plasma_te_highT: float = None

	@property
	def remainder(self):
		return self.lifshitz.total - self.plasmon - self.eddy_te.value - self.eddy_tm.value

	@property
	def no_cut(self):
		return self.eddy_te.no_cut

	@property
	def achieved_tol(self):
		tols = [self.lifshitz.achieved_tol, self.plasmon_tol, self.eddy_te.achieved_tol, self.eddy_tm.achieved_tol]
		for eddy in (self.eddy_te_highT, self.eddy_tm_highT):
			if eddy is not None:
				tols.append(eddy.achieved_tol)
		return max(tols)

	def eta(self, value):
		return value/self.ideal

	def rows(self):
		r""" Table rows in a fixed order

		Returns
		-------
		list of EnergyRow
		"""
		no_cut = 'no cut' if self.no_cut else ''
		rows = [
			EnergyRow('ideal Casimir', self.ideal, 1.),
			EnergyRow('Lifshitz total', self.lifshitz.total, self.lifshitz.eta, self.lifshitz.achieved_tol),
			EnergyRow('Lifshitz TE', self.lifshitz.te, self.eta(self.lifshitz.te), self.lifshitz.achieved_tol),
			EnergyRow('Lifshitz TM', self.lifshitz.tm, self.eta(self.lifshitz.tm), self.lifshitz.achieved_tol),
			EnergyRow('plasmon', self.plasmon, self.eta(self.plasmon), self.plasmon_tol),
			EnergyRow('plasmon asymptotic', self.plasmon_asymptotic, self.eta(self.plasmon_asymptotic)),
			EnergyRow('eddy TE (T=0)', self.eddy_te.value, self.eta(self.eddy_te.value), self.eddy_te.achieved_tol, no_cut),
			EnergyRow('eddy TM (T=0)', self.eddy_tm.value, self.eta(self.eddy_tm.value), self.eddy_tm.achieved_tol, no_cut),
			EnergyRow('propagating + remainder', self.remainder, self.eta(self.remainder), self.achieved_tol),
			]
		if self.eddy_te_highT is not None:
			rows += [
				EnergyRow('eddy TE (high T)', self.eddy_te_highT.value, self.eta(self.eddy_te_highT.value),
					self.eddy_te_highT.achieved_tol, no_cut),
				EnergyRow('eddy TM (high T)', self.eddy_tm_highT.value, self.eta(self.eddy_tm_highT.value),
					self.eddy_tm_highT.achieved_tol, no_cut),
				EnergyRow('plasma TE (high T)', self.plasma_te_highT, self.eta(self.plasma_te_highT)),
				]
		return rows


def decompose(geometry, m, cutoff, temp = None, quad = None, verbose = False):
	r""" Compute every contribution of the mode decomposition at one separation

	Parameters
	----------
	geometry: Geometry
	m: MaterialParams
	cutoff: CutoffLambda
		Bath cutoff for the zero-temperature mode sums
	temp: Temperature, optional
		If given and positive, the classical eddy free energies are added
	quad: QuadratureConfig, optional
	verbose: bool
		Print quadrature progress

	Returns
	-------
	EnergyBreakdown
	"""
	if quad is None:
		quad = QuadratureConfig()
	lifshitz = casimir_energy_T0(geometry, m, quad, verbose = verbose)
	plasmon, plasmon_err = plasmon_energy(geometry, m, cutoff, quad, verbose = verbose, full_output = True)
	eddy = {pol: eddy_energy_T0(pol, geometry, m, cutoff, quad, verbose = verbose) for pol in Polarization}

	extra = {}
	if temp is not None and temp.t > 0:
		extra['eddy_te_highT'] = eddy_free_energy_highT(Polarization.TE, geometry, m, temp, quad)
		extra['eddy_tm_highT'] = eddy_free_energy_highT(Polarization.TM, geometry, m, temp, quad)
		extra['plasma_te_highT'] = plasma_highT_reference(Polarization.TE, geometry, m, temp, quad)

	return EnergyBreakdown(
		ideal = ideal_casimir_energy_per_area(geometry),
		lifshitz = lifshitz,
		plasmon = plasmon,
		plasmon_tol = plasmon_err/abs(plasmon) if plasmon != 0 else plasmon_err,
		plasmon_asymptotic = plasmon_energy_asymptotic(geometry, m),
		eddy_te = eddy[Polarization.TE],
		eddy_tm = eddy[Polarization.TM],
		**extra)
