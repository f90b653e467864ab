# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled recurrence kernels; same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sqrt, fabs, M_PI

cnp.import_array()


def laguerre(int k, double a, x):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64).ravel()
    cdef Py_ssize_t n = xv.shape[0], i
    cdef int j
    out_p = np.empty(n)
    out_d = np.empty(n)
    cdef double[::1] pv = out_p
    cdef double[::1] dv = out_d
    cdef double p0, p1, p2, d0, d1, d2, c, xi
    for i in range(n):
        xi = xv[i]
        p0 = 1.0
        d0 = 0.0
        if k == 0:
            pv[i] = p0
            dv[i] = d0
            continue
        p1 = 1.0 + a - xi
        d1 = -1.0
        for j in range(1, k):
            c = 2.0 * j + 1.0 + a - xi
            p2 = (c * p1 - (j + a) * p0) / (j + 1.0)
            d2 = (c * d1 - p1 - (j + a) * d0) / (j + 1.0)
            p0 = p1
            p1 = p2
            d0 = d1
            d1 = d2
        pv[i] = p1
        dv[i] = d1
    shape = np.shape(x)
    return out_p.reshape(shape), out_d.reshape(shape)


def legendre_stripped(int l, int m, x):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64).ravel()
    cdef Py_ssize_t n = xv.shape[0], i
    cdef int j
    out = np.empty(n)
    cdef double[::1] ov = out
    cdef double pmm = sqrt(1.0 / (4.0 * M_PI))
    cdef double p0, p1, p2, an, bn, xi
    for j in range(1, m + 1):
        pmm *= sqrt((2.0 * j + 1.0) / (2.0 * j))
    for i in range(n):
        xi = xv[i]
        p0 = pmm
        if l == m:
            ov[i] = p0
            continue
        p1 = sqrt(2.0 * m + 3.0) * xi * pmm
        for j in range(m + 1, l):
            an = sqrt((2.0 * j + 1.0) * (2.0 * j + 3.0) / ((j + 1.0 + m) * (j + 1.0 - m)))
            bn = sqrt((2.0 * j + 3.0) * (j - m) * (j + m)
                      / ((2.0 * j - 1.0) * (j + 1.0 + m) * (j + 1.0 - m)))
            p2 = an * xi * p1 - bn * p0
            p0 = p1
            p1 = p2
        ov[i] = p1
    return out.reshape(np.shape(x))


def gauss_legendre(int n):
    x = np.empty(n)
    w = np.empty(n)
    cdef double[::1] xv = x
    cdef double[::1] wv = w
    cdef int half = (n + 1) // 2, i, j, it
    cdef double z, p0, p1, p2, dp, dz, wi
    for i in range(half):
        z = cos(M_PI * (i + 0.75) / (n + 0.5))
        for it in range(100):
            p0 = 1.0
            p1 = z
            for j in range(1, n):
                p2 = ((2.0 * j + 1.0) * z * p1 - j * p0) / (j + 1.0)
                p0 = p1
                p1 = p2
            dp = n * (z * p1 - p0) / (z * z - 1.0)
            dz = p1 / dp
            z -= dz
            if fabs(dz) < 1e-15:
                break
        p0 = 1.0
        p1 = z
        for j in range(1, n):
            p2 = ((2.0 * j + 1.0) * z * p1 - j * p0) / (j + 1.0)
            p0 = p1
            p1 = p2
        dp = n * (z * p1 - p0) / (z * z - 1.0)
        wi = 2.0 / ((1.0 - z * z) * dp * dp)
        xv[i] = -z
        xv[n - 1 - i] = z
        wv[i] = wi
        wv[n - 1 - i] = wi
    if n % 2 == 1:
        xv[half - 1] = 0.0
    return x, w
