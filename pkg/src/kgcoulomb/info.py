"""Shannon entropy, entropic power and Fisher information of the charge density.

The density factorizes as rho(r, theta) = D(r) A(theta), so

    S = -int D ln D r^2 dr  +  -int A ln A dOmega
    I = int (D')^2 / D r^2 dr  +  <r^-2> * int (dA/dtheta)^2 / A dOmega

with <r^-2> = int D dr. The phi-gradient vanishes since A is phi-independent.
Logarithms are natural (nats).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .constants import QuantumState, SystemSpec, Theory, kg_params
from .errors import FisherUndefinedError, IntegrationError
from .kg import RadialDensity, kg_density
from .quadrature import ConvergenceReport, integrate_interval, integrate_semi_infinite, substitution_power
from .schrodinger import sch_density
from .special import angular_density

SHANNON_TOL = 1e-8
FISHER_TOL = 1e-7
ANGULAR_TOL = 1e-12


@dataclass(frozen=True)
class MeasureReport:
    theory: Theory
    shannon_radial: float
    shannon_angular: float
    shannon_total: float
    entropic_power: float
    fisher: Optional[float] = None
    diagnostics: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def converged(self) -> bool:
        return all(rep.converged for rep in self.diagnostics.values())


def radial_density(system: SystemSpec, state: QuantumState, theory) -> RadialDensity:
    theory = Theory(theory)
    if theory is Theory.KG:
        return kg_density(system, state)
    return sch_density(system, state)


def _checked(report: ConvergenceReport, what: str) -> ConvergenceReport:
    if not report.converged:
        raise IntegrationError(
            f"{what} did not converge: estimated error {report.estimated_error:.3e} "
            f"> {report.abs_tol:.3e} after {report.levels_used} levels", report)
    return report


def shannon_radial_report(density: RadialDensity, tol: float = SHANNON_TOL) -> ConvergenceReport:
    ze = density.zero_exponent + 2.0
    # the extra log factor at the origin wants a steeper substitution than the bare power
    power = min(8, 2 * substitution_power(ze))
    rep = integrate_semi_infinite(density.shannon_integrand, ze, density.decay_scale, tol,
                                  power=power, breakpoints=density.node_radii())
    return _checked(rep, "radial Shannon integral")


def shannon_radial(density: RadialDensity, tol: float = SHANNON_TOL) -> float:
    return shannon_radial_report(density, tol).value


def _angular_integral(l, m, integrand, tol, what):
    ang = angular_density(l, m)
    rep = integrate_interval(lambda x: 2.0 * math.pi * integrand(ang, x), -1.0, 1.0, tol,
                             breakpoints=ang.zeros_x())
    return _checked(rep, what)


def _neg_a_log_a(ang, x):
    import numpy as np

    a = ang.value_x(x)
    loga = ang.log_value_x(x)
    return np.where(a > 0, -a * loga, 0.0)


def shannon_angular_report(l: int, m: int, tol: float = ANGULAR_TOL) -> ConvergenceReport:
    return _angular_integral(l, m, _neg_a_log_a, tol, "angular Shannon integral")


def shannon_angular(l: int, m: int, tol: float = ANGULAR_TOL) -> float:
    return shannon_angular_report(l, m, tol).value


def angular_fisher(l: int, m: int, tol: float = ANGULAR_TOL) -> float:
    """int (dA/dtheta)^2 / A dOmega for A = |Y_lm|^2."""
    return _angular_integral(l, m, lambda ang, x: ang.fisher_integrand_x(x), tol,
                             "angular Fisher integral").value


def entropic_power(shannon_total: float) -> float:
    return math.exp(2.0 * shannon_total / 3.0) / (2.0 * math.pi * math.e)


def shannon_report(system: SystemSpec, state: QuantumState, theory,
                   tol: float = SHANNON_TOL) -> MeasureReport:
    theory = Theory(theory)
    dens = radial_density(system, state, theory)
    rad = shannon_radial_report(dens, tol)
    ang = shannon_angular_report(state.l, state.m, min(tol, ANGULAR_TOL))
    total = rad.value + ang.value
    return MeasureReport(theory, rad.value, ang.value, total, entropic_power(total),
                         diagnostics={"shannon_radial": rad, "shannon_angular": ang})


def fisher_reports(system: SystemSpec, state: QuantumState, theory, tol: float = FISHER_TOL):
    """Fisher information with its radial, <r^-2> and angular pieces."""
    theory = Theory(theory)
    if theory is Theory.KG:
        lp = kg_params(system, state).l_prime
        if state.l == 0 or lp <= 0:
            raise FisherUndefinedError(
                f"KG Fisher information diverges at the origin for {state.label} (l' = {lp:.6g})")
    dens = radial_density(system, state, theory)
    ze = dens.zero_exponent
    rad = _checked(integrate_semi_infinite(lambda r: dens.fisher_integrand(r) * r * r, ze,
                                           dens.decay_scale, tol), "radial Fisher integral")
    diagnostics = {"fisher_radial": rad}
    value = rad.value
    if state.l > 0:
        inv_r2 = _checked(integrate_semi_infinite(dens.value, ze, dens.decay_scale, tol),
                          "<r^-2> integral")
        k_ang = angular_fisher(state.l, state.m, min(tol, ANGULAR_TOL))
        diagnostics["inverse_r2"] = inv_r2
        value += inv_r2.value * k_ang
    return value, diagnostics


def fisher(system: SystemSpec, state: QuantumState, theory, tol: float = FISHER_TOL) -> float:
    return fisher_reports(system, state, theory, tol)[0]


def measure_report(system: SystemSpec, state: QuantumState, theory,
                   shannon_tol: float = SHANNON_TOL, fisher_tol: float = FISHER_TOL) -> MeasureReport:
    """Shannon fields plus Fisher; fisher is None where it is undefined."""
    rep = shannon_report(system, state, theory, shannon_tol)
    try:
        value, diag = fisher_reports(system, state, theory, fisher_tol)
    except FisherUndefinedError:
        return rep
    return MeasureReport(rep.theory, rep.shannon_radial, rep.shannon_angular, rep.shannon_total,
                         rep.entropic_power, value, {**rep.diagnostics, **diag})
