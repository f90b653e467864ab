"""Klein-Gordon Coulomb bound states: charge density, moments and information measures.

Everything is in atomic units (hbar = m_e = e = 1, c = 1/alpha).
"""

from .constants import (ALPHA, PION_MASS, KgParams, QuantumState, SystemSpec, Theory, binding_energy,
                        kg_params, make_state, make_system, parse_label)
from .errors import (DomainError, FisherUndefinedError, IntegrandError, IntegrationError, InvalidArgumentError,
                     InvalidQuantumNumbersError, KGError, SupercriticalChargeError)
from .info import MeasureReport, entropic_power, fisher, measure_report, shannon_angular, shannon_radial, shannon_report
from .kernels import BACKEND
from .kg import density_3d, kg_density, radial_u
from .moments import MomentsResult, circular_closed_forms, heisenberg, j_integral, radial_moment, sch_moments
from .schrodinger import sch_density, sch_energy
from .special import angular_density

__all__ = [
    "ALPHA", "PION_MASS", "BACKEND", "KgParams", "QuantumState", "SystemSpec", "Theory", "MeasureReport",
    "MomentsResult", "binding_energy", "kg_params", "make_state", "make_system", "parse_label",
    "DomainError", "FisherUndefinedError", "IntegrandError", "IntegrationError", "InvalidArgumentError",
    "InvalidQuantumNumbersError", "KGError", "SupercriticalChargeError", "entropic_power", "fisher",
    "measure_report", "shannon_angular", "shannon_radial", "shannon_report", "density_3d", "kg_density",
    "radial_u", "circular_closed_forms", "heisenberg", "j_integral", "radial_moment", "sch_moments",
    "sch_density", "sch_energy", "angular_density",
]
