# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid kernels: stencil application and fused p-power passes.

Mirrors the signatures in ``_numpy_impl``; the fused passes avoid the
intermediate arrays the numpy fallback allocates.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, pow

cnp.import_array()

BACKEND = "cython"


def lap_apply(double[::1] values, long[::1] node_idx, long[:, ::1] nb_idx,
              double inv_h2):
    cdef Py_ssize_t n = node_idx.shape[0]
    cdef Py_ssize_t m = nb_idx.shape[1]
    cdef Py_ssize_t i, k
    cdef double acc
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    for i in range(n):
        acc = 0.0
        for k in range(m):
            acc += values[nb_idx[i, k]]
        out[i] = (acc - m * values[node_idx[i]]) * inv_h2
    return out_arr


def power_pass(double[::1] F, double[::1] Fxi, double[::1] Fxixi,
               double p, double M0):
    cdef Py_ssize_t n = F.shape[0]
    cdef Py_ssize_t i
    cdef double t, tpm2, tpm1, s, sum_tp = 0.0
    cdef double inv_M0 = 1.0 / M0
    cdef double wfac = p * inv_M0 * inv_M0
    q_arr = np.empty(n, dtype=np.float64)
    w_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] q = q_arr
    cdef double[::1] w = w_arr
    for i in range(n):
        t = fabs(F[i]) * inv_M0
        tpm2 = pow(t, p - 2.0)
        tpm1 = tpm2 * t
        sum_tp += tpm1 * t
        s = 1.0 if F[i] > 0.0 else (-1.0 if F[i] < 0.0 else 0.0)
        q[i] = tpm1 * s * Fxi[i]
        w[i] = wfac * tpm2 * ((p - 1.0) * Fxi[i] * Fxi[i] + F[i] * Fxixi[i])
    return sum_tp, q_arr, w_arr


def power_sum(double[::1] F, double p, double M0):
    cdef Py_ssize_t n = F.shape[0]
    cdef Py_ssize_t i
    cdef double sum_tp = 0.0
    cdef double inv_M0 = 1.0 / M0
    for i in range(n):
        sum_tp += pow(fabs(F[i]) * inv_M0, p)
    return sum_tp
