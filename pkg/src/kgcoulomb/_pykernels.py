"""Pure numpy versions of the recurrence kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same arithmetic order; :mod:`kgcoulomb.kernels` picks one at import.
"""

import math

import numpy as np


def laguerre(k, a, x):
    """Conventional generalized Laguerre L_k^(a)(x) and its x-derivative."""
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    d0 = np.zeros_like(x)
    if k == 0:
        return p0, d0
    p1 = 1.0 + a - x
    d1 = -np.ones_like(x)
    for j in range(1, k):
        c = 2.0 * j + 1.0 + a - x
        p2 = (c * p1 - (j + a) * p0) / (j + 1.0)
        d2 = (c * d1 - p1 - (j + a) * d0) / (j + 1.0)
        p0, p1 = p1, p2
        d0, d1 = d1, d2
    return p1, d1


def legendre_stripped(l, m, x):
    """Normalized associated Legendre function with the sin^m factor removed.

    Returns q with  Y_l^m(theta) = sin(theta)^m * q(cos theta) up to phase,
    normalized so that 2*pi * int (sin^m q)^2 dx = 1.
    """
    x = np.asarray(x, dtype=float)
    pmm = math.sqrt(1.0 / (4.0 * math.pi))
    for i in range(1, m + 1):
        pmm *= math.sqrt((2.0 * i + 1.0) / (2.0 * i))
    p0 = np.full_like(x, pmm)
    if l == m:
        return p0
    p1 = math.sqrt(2.0 * m + 3.0) * x * pmm
    for j in range(m + 1, l):
        an = math.sqrt((2.0 * j + 1.0) * (2.0 * j + 3.0) / ((j + 1.0 + m) * (j + 1.0 - m)))
        bn = math.sqrt((2.0 * j + 3.0) * (j - m) * (j + m)
                       / ((2.0 * j - 1.0) * (j + 1.0 + m) * (j + 1.0 - m)))
        p2 = an * x * p1 - bn * p0
        p0, p1 = p1, p2
    return p1


def gauss_legendre(n):
    """Gauss-Legendre nodes (increasing) and weights on [-1, 1] by Newton."""
    x = np.empty(n)
    w = np.empty(n)
    half = (n + 1) // 2
    for i in range(half):
        z = math.cos(math.pi * (i + 0.75) / (n + 0.5))
        for _ in range(100):
            p0, p1 = 1.0, z
            for j in range(1, n):
                p0, p1 = p1, ((2.0 * j + 1.0) * z * p1 - j * p0) / (j + 1.0)
            dp = n * (z * p1 - p0) / (z * z - 1.0)
            dz = p1 / dp
            z -= dz
            if abs(dz) < 1e-15:
                break
        p0, p1 = 1.0, z
        for j in range(1, n):
            p0, p1 = p1, ((2.0 * j + 1.0) * z * p1 - j * p0) / (j + 1.0)
        dp = n * (z * p1 - p0) / (z * z - 1.0)
        wi = 2.0 / ((1.0 - z * z) * dp * dp)
        x[i] = -z
        x[n - 1 - i] = z
        w[i] = wi
        w[n - 1 - i] = wi
    if n % 2 == 1:
        x[half - 1] = 0.0
    return x, w
