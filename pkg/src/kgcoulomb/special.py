"""Special functions: log-gamma, orthonormal Laguerre polynomials and |Y_lm|^2."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, InvalidArgumentError


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    x = float(x)
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def laguerre_norm(k: int, a: float) -> float:
    """sqrt(k! / Gamma(k + a + 1)), the orthonormalizing factor."""
    return math.exp(0.5 * (log_gamma(k + 1.0) - log_gamma(k + a + 1.0)))


def laguerre_orthonormal(k, a, x):
    """Orthonormal generalized Laguerre polynomial and its x-derivative.

    Orthonormal with respect to the weight x^a e^-x on [0, inf). Accepts
    scalars or arrays for ``x``; returns ``(value, derivative)`` of the same
    shape.
    """
    if int(k) != k or k < 0:
        raise InvalidArgumentError(f"degree must be a non-negative integer, got {k}")
    if not a > -1:
        raise DomainError(f"Laguerre parameter must exceed -1, got {a}")
    xa = np.asarray(x, dtype=float)
    if np.any(xa < 0):
        raise DomainError("Laguerre argument must be non-negative")
    p, d = kernels.laguerre(int(k), float(a), xa)
    c = laguerre_norm(int(k), float(a))
    if np.ndim(x) == 0:
        return float(c * p), float(c * d)
    return c * p, c * d


@dataclass(frozen=True)
class AngularDensity:
    """A(theta) = |Y_lm(theta, phi)|^2, normalized on the unit sphere.

    The density is phi-independent and depends on m only through |m|.
    Evaluators accept cos(theta) (``*_x`` methods) or theta itself.
    """

    l: int
    m: int

    @property
    def abs_m(self) -> int:
        return abs(self.m)

    def _parts(self, x, s=None):
        x = np.asarray(x, dtype=float)
        mm = self.abs_m
        q = kernels.legendre_stripped(self.l, mm, x)
        if s is None:
            s = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
        amp = q * s ** mm
        # d/dtheta of sin^m q(cos theta)
        if mm < self.l:
            q_up = kernels.legendre_stripped(self.l, mm + 1, x)
            up = math.sqrt((self.l - mm) * (self.l + mm + 1.0)) * q_up * s ** (mm + 1)
        else:
            up = np.zeros_like(x)
        if mm > 0:
            damp = mm * x * s ** (mm - 1) * q - up
        else:
            damp = -up
        return amp, damp

    def amplitude_x(self, x):
        """sqrt(A) up to sign and its theta-derivative, as functions of cos(theta)."""
        return self._parts(x)

    def value_x(self, x):
        amp, _ = self._parts(x)
        return amp * amp

    def derivative_x(self, x):
        amp, damp = self._parts(x)
        return 2.0 * amp * damp

    def fisher_integrand_x(self, x):
        """(dA/dtheta)^2 / A written as 4 (d sqrt(A)/dtheta)^2, finite at zeros of A."""
        _, damp = self._parts(x)
        return 4.0 * damp * damp

    def log_value_x(self, x):
        amp, _ = self._parts(x)
        with np.errstate(divide="ignore"):
            return 2.0 * np.log(np.abs(amp))

    def _parts_theta(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self._parts(np.cos(theta), np.abs(np.sin(theta)))

    def __call__(self, theta):
        amp, _ = self._parts_theta(theta)
        return amp * amp

    def derivative(self, theta):
        """dA/dtheta; the sign follows sin(theta) >= 0, i.e. theta in [0, pi]."""
        amp, damp = self._parts_theta(theta)
        return 2.0 * amp * damp

    def zeros_x(self):
        """Interior zeros of A in cos(theta), sorted ascending."""
        k = self.l - self.abs_m
        if k == 0:
            return np.empty(0)
        from scipy.special import roots_jacobi

        roots, _ = roots_jacobi(k, self.abs_m, self.abs_m)
        return np.sort(roots)


def angular_density(l: int, m: int) -> AngularDensity:
    if int(l) != l or l < 0:
        raise InvalidArgumentError(f"l must be a non-negative integer, got {l}")
    if int(m) != m or abs(m) > l:
        raise InvalidArgumentError(f"|m| must not exceed l, got l={l}, m={m}")
    return AngularDensity(int(l), int(m))
