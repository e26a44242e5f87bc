# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: first-order recurrences for exponential-kernel
quadrature.  Mirrors kreinwave._scan_py."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

IMPL = "compiled"


def linear_recurrence(c, double rho):
    """Solve y[i] = rho*y[i-1] + c[i] with y[-1] = 0 (last axis)."""
    arr = np.ascontiguousarray(c, dtype=np.float64)
    if arr.ndim == 1:
        out = np.empty_like(arr)
        _recurrence_1d(arr, rho, out)
        return out
    flat = arr.reshape(-1, arr.shape[-1])
    out = np.empty_like(flat)
    for k in range(flat.shape[0]):
        _recurrence_1d(flat[k], rho, out[k])
    return out.reshape(arr.shape)


cdef void _recurrence_1d(double[::1] c, double rho, double[::1] out) nogil:
    cdef Py_ssize_t i, n = c.shape[0]
    cdef double acc = 0.0
    for i in range(n):
        acc = rho * acc + c[i]
        out[i] = acc


def fused_exp_scans(u, double w_far, double w_near, double rho):
    """Forward/backward exponentially-weighted panel scans (see _scan_py)."""
    arr = np.ascontiguousarray(u, dtype=np.float64)
    squeeze = arr.ndim == 1
    flat = arr.reshape(-1, arr.shape[-1])
    fwd = np.empty_like(flat)
    bwd = np.empty_like(flat)
    for k in range(flat.shape[0]):
        _fused_1d(flat[k], w_far, w_near, rho, fwd[k], bwd[k])
    if squeeze:
        return fwd[0], bwd[0]
    return fwd.reshape(arr.shape), bwd.reshape(arr.shape)


cdef void _fused_1d(double[::1] u, double w_far, double w_near, double rho,
                    double[::1] fwd, double[::1] bwd) nogil:
    cdef Py_ssize_t i, n = u.shape[0]
    cdef double acc = 0.0
    for i in range(n):
        if i == 0:
            acc = 0.0
        else:
            acc = rho * acc + w_far * u[i - 1] + w_near * u[i]
        fwd[i] = acc
    acc = 0.0
    for i in range(n - 1, -1, -1):
        if i == n - 1:
            acc = 0.0
        else:
            acc = rho * acc + w_far * u[i + 1] + w_near * u[i]
        bwd[i] = acc
