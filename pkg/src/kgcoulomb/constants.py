"""Physical constants, quantum-number validation and relativistic parameters.

Atomic units throughout: hbar = m_e = e = 1, so the speed of light is
1/alpha and the Coulomb coupling Z e^2 equals gamma * c with gamma = Z alpha.
Particle masses are in electron masses and nuclei are infinitely heavy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidArgumentError, InvalidQuantumNumbersError, SupercriticalChargeError

ALPHA = 7.2973525693e-3  # CODATA 2018
PION_MASS = 273.132054  # pi- mass in electron masses
TOL_CRITICAL = 1e-9


class Theory(str, Enum):
    KG = "kg"
    SCH = "sch"


@dataclass(frozen=True)
class SystemSpec:
    Z: float
    mass: float
    alpha: float = ALPHA

    @property
    def c(self) -> float:
        return 1.0 / self.alpha

    @property
    def gamma(self) -> float:
        return self.Z * self.alpha

    @property
    def rest_energy(self) -> float:
        return self.mass * self.c ** 2


@dataclass(frozen=True)
class QuantumState:
    n: int
    l: int
    m: int = 0

    @property
    def label(self) -> str:
        return f"{self.n}{spectroscopic_letter(self.l)}"


@dataclass(frozen=True)
class KgParams:
    gamma: float
    l_prime: float
    epsilon: float
    beta: float
    lam: float
    norm_sq: float

    @property
    def effective_n(self) -> float:
        """n - l + l', the quantity that replaces n in the KG spectrum."""
        return self.lam


_LETTERS = "SPDFGHIKLMNOQRTUVWXY"


def spectroscopic_letter(l: int) -> str:
    return _LETTERS[l] if l < len(_LETTERS) else f"[l={l}]"


def parse_label(label: str, m: int = 0) -> QuantumState:
    """Parse ``"4P"`` style labels (or ``"4,1,0"`` triples) into a state."""
    text = label.strip()
    if "," in text:
        parts = [int(p) for p in text.split(",")]
        if len(parts) == 2:
            parts.append(m)
        if len(parts) != 3:
            raise InvalidArgumentError(f"cannot parse state {label!r}")
        return make_state(*parts)
    digits = text[:-1]
    letter = text[-1:].upper()
    if not digits.isdigit() or letter not in _LETTERS:
        raise InvalidArgumentError(f"cannot parse state {label!r}")
    return make_state(int(digits), _LETTERS.index(letter), m)


def make_system(Z: float, mass: float, alpha: float = ALPHA) -> SystemSpec:
    Z, mass, alpha = float(Z), float(mass), float(alpha)
    if not (math.isfinite(Z) and Z > 0):
        raise InvalidArgumentError(f"nuclear charge must be positive, got Z={Z}")
    if not (math.isfinite(mass) and mass > 0):
        raise InvalidArgumentError(f"particle mass must be positive, got mass={mass}")
    if not 0 < alpha < 1:
        raise InvalidArgumentError(f"fine-structure constant must lie in (0, 1), got {alpha}")
    return SystemSpec(Z, mass, alpha)


def make_state(n: int, l: int, m: int = 0) -> QuantumState:
    for name, value in (("n", n), ("l", l), ("m", m)):
        if int(value) != value:
            raise InvalidQuantumNumbersError(f"{name}={value} is not an integer", f"{name} integer")
    n, l, m = int(n), int(l), int(m)
    if n < 1:
        raise InvalidQuantumNumbersError(f"n={n} violates n >= 1", "n >= 1")
    if not 0 <= l <= n - 1:
        raise InvalidQuantumNumbersError(f"l={l} violates 0 <= l <= n-1 for n={n}", "0 <= l <= n-1")
    if abs(m) > l:
        raise InvalidQuantumNumbersError(f"m={m} violates |m| <= l for l={l}", "|m| <= l")
    return QuantumState(n, l, m)


def effective_l(l: int, gamma: float) -> float:
    """l' = sqrt((l + 1/2)^2 - gamma^2) - 1/2, evaluated without cancellation.

    The rationalized form keeps full relative accuracy of l' - l when gamma
    is tiny, which the non-relativistic limit checks depend on.
    """
    h = l + 0.5
    root = math.sqrt((h - gamma) * (h + gamma))
    return l - gamma * gamma / (root + h)


def kg_params(system: SystemSpec, state: QuantumState) -> KgParams:
    gamma = system.gamma
    l = state.l
    if gamma >= l + 0.5 - TOL_CRITICAL:
        raise SupercriticalChargeError(
            f"Z*alpha = {gamma:.9g} is not below l + 1/2 = {l + 0.5} for state {state.label}"
        )
    c = system.c
    mc2 = system.rest_energy
    l_prime = effective_l(l, gamma)
    nu = state.n - l + l_prime
    ratio = gamma / nu
    epsilon = mc2 / math.sqrt(1.0 + ratio * ratio)
    # m^2c^4 - eps^2 = eps^2 (gamma/nu)^2, avoids cancellation for small gamma
    beta = 2.0 * epsilon * ratio / c
    lam = 2.0 * epsilon * system.Z / (c * c * beta)
    norm_sq = (mc2 * gamma / c) / (nu * nu + gamma * gamma)
    return KgParams(gamma, l_prime, epsilon, beta, lam, norm_sq)


def binding_energy(system: SystemSpec, state: QuantumState) -> float:
    """m c^2 - epsilon, computed without subtracting nearly equal numbers."""
    p = kg_params(system, state)
    ratio = p.gamma / p.lam
    q = ratio * ratio
    return system.rest_energy * q / (math.sqrt(1.0 + q) * (math.sqrt(1.0 + q) + 1.0))
