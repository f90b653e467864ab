"""Klein-Gordon Coulomb bound states and their Lorentz-invariant charge density.

Radial functions are evaluated in s = beta * r. The charge density is
normalized to unit charge, so D(r) r^2 integrates to one.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import roots_genlaguerre

from . import kernels
from .constants import KgParams, QuantumState, SystemSpec, Theory, kg_params
from .special import AngularDensity, laguerre_norm


class RadialDensity:
    """Radial density written as D(r) = w(r) * g(r)^2.

    Subclasses supply ``_parts`` returning (w, dw/dr, g, dg/dr) and
    ``_log_parts`` returning (ln w, ln|g|) evaluated without underflow.
    """

    theory: Theory
    zero_exponent: float
    decay_scale: float

    def _parts(self, r):
        raise NotImplementedError

    def _log_parts(self, r):
        raise NotImplementedError

    def value(self, r):
        w, _, g, _ = self._parts(np.asarray(r, dtype=float))
        return w * g * g

    __call__ = value

    def derivative(self, r):
        w, dw, g, dg = self._parts(np.asarray(r, dtype=float))
        return dw * g * g + 2.0 * w * g * dg

    def log_value(self, r):
        lw, lg = self._log_parts(np.asarray(r, dtype=float))
        return lw + 2.0 * lg

    def fisher_integrand(self, r):
        """(dD/dr)^2 / D, finite at the nodes of g."""
        w, dw, g, dg = self._parts(np.asarray(r, dtype=float))
        t = dw * g + 2.0 * w * dg
        return t * t / w

    def shannon_integrand(self, r):
        """-D ln D r^2, set to zero where D underflows or vanishes."""
        r = np.asarray(r, dtype=float)
        logd = self.log_value(r)
        with np.errstate(invalid="ignore", over="ignore"):
            out = -np.exp(logd) * logd * r * r
        return np.where(np.isfinite(logd), out, 0.0)

    def node_count(self) -> int:
        raise NotImplementedError

    def node_radii(self) -> np.ndarray:
        """Radii where the density vanishes (zeros of its Laguerre factor)."""
        raise NotImplementedError


class KGRadialDensity(RadialDensity):
    theory = Theory.KG

    def __init__(self, system: SystemSpec, state: QuantumState, params: KgParams):
        self.system = system
        self.state = state
        self.params = params
        self.degree = state.n - state.l - 1
        self.lag_a = 2.0 * params.l_prime + 1.0
        self.zero_exponent = 2.0 * params.l_prime - 1.0
        self.decay_scale = 1.0 / params.beta
        self._norm = math.sqrt(params.norm_sq) * laguerre_norm(self.degree, self.lag_a)
        self._log_norm = 0.5 * math.log(params.norm_sq) + math.log(laguerre_norm(self.degree, self.lag_a))

    def _v(self, s):
        """v = u/s and dv/ds, with u the radial function of s."""
        lp = self.params.l_prime
        lag, dlag = kernels.laguerre(self.degree, self.lag_a, s)
        base = self._norm * np.exp(-0.5 * s) * s ** (lp - 1.0)
        v = base * s * lag
        dv = base * ((lp - 0.5 * s) * lag + s * dlag)
        return v, dv

    def _parts(self, r):
        p = self.params
        mc2 = self.system.rest_energy
        gc = p.gamma * self.system.c
        s = p.beta * r
        v, dv = self._v(s)
        w = (p.epsilon + gc / r) / mc2
        dw = -gc / (r * r * mc2)
        return w, dw, p.beta * v, p.beta * p.beta * dv

    def _log_parts(self, r):
        p = self.params
        s = p.beta * r
        lag, _ = kernels.laguerre(self.degree, self.lag_a, s)
        with np.errstate(divide="ignore"):
            lg = math.log(p.beta) + self._log_norm + p.l_prime * np.log(s) - 0.5 * s + np.log(np.abs(lag))
        lw = np.log((p.epsilon + p.gamma * self.system.c / r) / self.system.rest_energy)
        return lw, lg

    def u(self, s):
        """Radial function u(s) and du/ds."""
        s = np.asarray(s, dtype=float)
        lp = self.params.l_prime
        lag, dlag = kernels.laguerre(self.degree, self.lag_a, s)
        base = self._norm * np.exp(-0.5 * s) * s ** lp
        return base * s * lag, base * ((lp + 1.0 - 0.5 * s) * lag + s * dlag)

    def node_count(self) -> int:
        return self.degree

    def node_radii(self) -> np.ndarray:
        if self.degree == 0:
            return np.empty(0)
        return roots_genlaguerre(self.degree, self.lag_a)[0] / self.params.beta


def radial_u(system: SystemSpec, state: QuantumState, s):
    """u(s) = N s^(l'+1) e^(-s/2) L~_{n-l-1}^(2l'+1)(s) and its s-derivative."""
    dens = KGRadialDensity(system, state, kg_params(system, state))
    value, deriv = dens.u(s)
    if np.ndim(s) == 0:
        return float(value), float(deriv)
    return value, deriv


def kg_density(system: SystemSpec, state: QuantumState) -> KGRadialDensity:
    return KGRadialDensity(system, state, kg_params(system, state))


def density_3d(density: RadialDensity, angular: AngularDensity, r, theta):
    """Full charge density rho(r, theta) = D(r) A(theta)."""
    return density.value(r) * angular(theta)
