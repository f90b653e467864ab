"""Radial expectation values, centroid and Heisenberg variance of KG states.

Closed forms in atomic units: hbar c -> c, m0 c^2 -> mass c^2, Z e^2 -> gamma c.
With D(r) = (eps + gamma c / r) u(beta r)^2 / (r^2 m0 c^2),

    <r^k> = N^2 / (m0 c^2) * beta^-k * [ (eps/beta) J(k) + gamma c J(k-1) ],

where J(k) = int_0^inf x^(2l'+k+2) e^-x [L~_{n-l-1}^(2l'+1)(x)]^2 dx.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constants import QuantumState, SystemSpec, kg_params, make_state
from .errors import InvalidArgumentError
from .quadrature import integrate_semi_infinite
from .special import log_gamma


@dataclass(frozen=True)
class MomentsResult:
    r_mean: float
    r2: float
    sigma2: float
    moments: dict = field(default_factory=dict)


def j_integral(n: int, l: int, l_prime: float, k: int) -> float:
    """Laguerre moment J(k) as a finite sum of gamma-function ratios."""
    if k < -1:
        raise InvalidArgumentError(f"J(k) requires k >= -1, got {k}")
    if not l_prime > -0.5:
        raise InvalidArgumentError(f"l' must exceed -1/2, got {l_prime}")
    nr = n - l - 1
    if nr < 0:
        raise InvalidArgumentError(f"need l <= n - 1, got n={n}, l={l}")
    log_pre = log_gamma(nr + 1.0) - log_gamma(nr + 2.0 * l_prime + 2.0)
    terms = []
    for j in range(max(0, nr - k - 1), nr + 1):
        b = math.comb(k + 1, nr - j)
        terms.append(b * b * math.exp(log_pre + log_gamma(2.0 * l_prime + k + j + 3.0)
                                      - log_gamma(j + 1.0)))
    return math.fsum(terms)


def _moment(system: SystemSpec, state: QuantumState, k: int, params=None) -> float:
    p = params or kg_params(system, state)
    jk = j_integral(state.n, state.l, p.l_prime, k)
    jk1 = j_integral(state.n, state.l, p.l_prime, k - 1)
    bracket = (p.epsilon / p.beta) * jk + p.gamma * system.c * jk1
    return p.norm_sq / system.rest_energy * p.beta ** (-k) * bracket


def radial_moment(system: SystemSpec, state: QuantumState, k: int) -> float:
    """<r^k> for integer k >= 0 over the KG charge density."""
    if int(k) != k or k < 0:
        raise InvalidArgumentError(f"moment order must be a non-negative integer, got {k}")
    return _moment(system, state, int(k))


def heisenberg(system: SystemSpec, state: QuantumState, orders=(0, 1, 2)) -> MomentsResult:
    p = kg_params(system, state)
    ks = sorted(set(orders) | {0, 1, 2})
    moments = {k: _moment(system, state, k, p) for k in ks}
    r_mean, r2 = moments[1], moments[2]
    return MomentsResult(r_mean, r2, r2 - r_mean * r_mean, moments)


def circular_closed_forms(system: SystemSpec, n: int) -> MomentsResult:
    """Centroid, <r^2> and variance of the circular state (n, n-1)."""
    p = kg_params(system, make_state(n, n - 1, 0))
    g2 = p.gamma ** 2
    a = p.l_prime + 1.0
    length = system.c / system.rest_energy  # reduced Compton wavelength
    r_mean = (length / (4.0 * p.gamma * math.sqrt(1.0 + g2 / (a * a)))
              * ((2.0 * a) * (2.0 * a + 1.0) + 4.0 * g2))
    r2 = length ** 2 / (2.0 * g2) * a * (2.0 * a + 1.0) * (a * (a + 1.0) + g2)
    sigma2 = (length ** 2 * a / (4.0 * g2)
              * (a * (2.0 * a + 1.0) * (a * a + 2.0 * g2) + 2.0 * g2 * g2) / (a * a + g2))
    return MomentsResult(r_mean, r2, sigma2, {0: 1.0, 1: r_mean, 2: r2})


def sch_moments(system: SystemSpec, state: QuantumState) -> MomentsResult:
    """Textbook hydrogenic <r>, <r^2> and variance for the same Z and mass."""
    n, l = state.n, state.l
    a = 1.0 / (system.Z * system.mass)
    r_mean = a * (3 * n * n - l * (l + 1)) / 2.0
    r2 = a * a * n * n * (5 * n * n + 1 - 3 * l * (l + 1)) / 2.0
    return MomentsResult(r_mean, r2, r2 - r_mean * r_mean, {0: 1.0, 1: r_mean, 2: r2})


def moment_by_quadrature(density, k: float, tol: float = 1e-12):
    """<r^k> = int D r^(k+2) dr by quadrature; the independent check."""
    report = integrate_semi_infinite(lambda r: density(r) * r ** (k + 2),
                                     density.zero_exponent + k + 2, density.decay_scale, tol)
    return report
