"""Non-relativistic hydrogenic baseline with the same charge and particle mass."""

from __future__ import annotations

import math

import numpy as np
from scipy.special import roots_genlaguerre

from . import kernels
from .constants import QuantumState, SystemSpec, Theory
from .kg import RadialDensity
from .special import laguerre_norm


class SchRadialDensity(RadialDensity):
    """D(r) = R_nl(r)^2 with R_nl built on x = 2 kappa r, kappa = mass Z / n."""

    theory = Theory.SCH

    def __init__(self, system: SystemSpec, state: QuantumState):
        self.system = system
        self.state = state
        self.kappa = system.mass * system.Z / state.n
        self.degree = state.n - state.l - 1
        self.lag_a = 2.0 * state.l + 1.0
        self.zero_exponent = 2.0 * state.l
        self.decay_scale = 1.0 / self.kappa
        log_c = 1.5 * math.log(2.0 * self.kappa) - 0.5 * math.log(2.0 * state.n)
        self._log_norm = log_c + math.log(laguerre_norm(self.degree, self.lag_a))
        self._norm = math.exp(self._log_norm)

    def radial(self, r):
        """R_nl(r) and dR/dr."""
        l = self.state.l
        x = 2.0 * self.kappa * np.asarray(r, dtype=float)
        lag, dlag = kernels.laguerre(self.degree, self.lag_a, x)
        e = self._norm * np.exp(-0.5 * x)
        xl = x ** l
        R = e * xl * lag
        dR = e * ((l * x ** (l - 1) if l else 0.0) * lag + xl * (dlag - 0.5 * lag))
        return R, 2.0 * self.kappa * dR

    def _parts(self, r):
        R, dR = self.radial(r)
        one = np.ones_like(R)
        return one, np.zeros_like(R), R, dR

    def _log_parts(self, r):
        x = 2.0 * self.kappa * r
        lag, _ = kernels.laguerre(self.degree, self.lag_a, x)
        with np.errstate(divide="ignore"):
            lg = self._log_norm + self.state.l * np.log(x) - 0.5 * x + np.log(np.abs(lag))
        return np.zeros_like(lg), lg

    def node_count(self) -> int:
        return self.degree

    def node_radii(self) -> np.ndarray:
        if self.degree == 0:
            return np.empty(0)
        return roots_genlaguerre(self.degree, self.lag_a)[0] / (2.0 * self.kappa)


def sch_density(system: SystemSpec, state: QuantumState) -> SchRadialDensity:
    return SchRadialDensity(system, state)


def sch_energy(system: SystemSpec, state: QuantumState) -> float:
    return -system.mass * system.Z ** 2 / (2.0 * state.n ** 2)
