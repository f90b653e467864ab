"""Independent reference computations used only by the tests."""

import math

import mpmath as mp
import numpy as np
from scipy.special import entr

from kgcoulomb.quadrature import integrate_interval

mp.mp.dps = 40
ALPHA = mp.mpf("7.2973525693e-3")


def mp_kg(Z, mass, n, l):
    """Relativistic parameters straight from their defining formulas, in mpmath."""
    Z, mass = mp.mpf(Z), mp.mpf(mass)
    c = 1 / ALPHA
    g = Z * ALPHA
    lp = mp.sqrt((l + mp.mpf(1) / 2) ** 2 - g ** 2) - mp.mpf(1) / 2
    eps = mass * c ** 2 / mp.sqrt(1 + (g / (n - l + lp)) ** 2)
    beta = 2 * mp.sqrt((mass * c ** 2) ** 2 - eps ** 2) / c
    lam = 2 * eps * Z / (c ** 2 * beta)
    return {"gamma": g, "l_prime": lp, "epsilon": eps, "beta": beta, "lam": lam, "c": c}


def laguerre_monomial(k, a, x):
    """L_k^(a)(x) from its explicit power series (generalized binomials via mpmath)."""
    total = mp.mpf(0)
    for i in range(k + 1):
        total += (-1) ** i * mp.binomial(k + a, k - i) * mp.mpf(x) ** i / mp.factorial(i)
    return total


def theta_rule(ang, kind, tol=1e-13):
    """Nodes and weights in theta (the library integrates in cos theta), graded at zeros of A."""
    zeros = np.sort(np.arccos(ang.zeros_x()))
    if kind == "shannon":
        f = lambda t: entr(ang(t)) * np.sin(t)
    else:
        def f(t):
            a = ang(t)
            with np.errstate(invalid="ignore", divide="ignore"):
                return np.where(a > 0, ang.derivative(t) ** 2 / a, 0.0) * np.sin(t)
    rep = integrate_interval(f, 0.0, math.pi, tol, breakpoints=zeros, power=3)
    return rep.nodes, rep.weights


def shannon_2d(density, ang, r_nodes, r_weights, t_nodes, t_weights):
    """-int rho ln rho dV on a tensor (r, theta) grid, rho evaluated as a product."""
    d = density.value(r_nodes)
    a = ang(t_nodes)
    total = 0.0
    for j in range(len(t_nodes)):
        rho = d * a[j]
        total += t_weights[j] * math.sin(t_nodes[j]) * np.dot(r_weights, entr(rho) * r_nodes ** 2)
    return 2.0 * math.pi * total


def fisher_2d(density, ang, r_nodes, r_weights, t_nodes, t_weights):
    """int |grad rho|^2 / rho dV with the raw quotient, radial and polar components."""
    d = density.value(r_nodes)
    dd = density.derivative(r_nodes)
    a = ang(t_nodes)
    da = ang.derivative(t_nodes)
    total = 0.0
    for j in range(len(t_nodes)):
        rho = d * a[j]
        grad2 = (dd * a[j]) ** 2 + (d * da[j] / r_nodes) ** 2
        with np.errstate(invalid="ignore", divide="ignore"):
            q = np.where(rho > 0, grad2 / rho, 0.0)
        total += t_weights[j] * math.sin(t_nodes[j]) * np.dot(r_weights, q * r_nodes ** 2)
    return 2.0 * math.pi * total


def trapezoid(f, a, b, n):
    x = np.linspace(a, b, n)
    y = f(x)
    h = (b - a) / (n - 1)
    return h * (y.sum() - 0.5 * (y[0] + y[-1]))
