"""Pure-Python (scipy-backed) implementation of the hot scan kernels.

``kreinwave.scans`` selects this module when the compiled extension is not
available (or when KREINWAVE_PURE is set).  The recurrence

    y[0] = c[0],   y[i] = rho * y[i-1] + c[i]

is evaluated with ``scipy.signal.lfilter``, which runs the same first-order
filter in C.
"""

import numpy as np
from scipy.signal import lfilter

IMPL = "python"


def linear_recurrence(c, rho):
    """Solve y[i] = rho*y[i-1] + c[i] with y[-1] = 0."""
    c = np.asarray(c)
    return lfilter([1.0], [1.0, -rho], c, axis=-1)


def fused_exp_scans(u, w_far, w_near, rho):
    """Forward/backward exponentially-weighted panel scans of samples ``u``.

    Returns (fwd, bwd) with

        fwd[i] = sum over panels [j-1, j] <= i of
                 rho**(i-j) * (w_far*u[j-1] + w_near*u[j])
        bwd[i] = mirror scan from the right end.

    These are the panel-exact integrals of exp(-lam*|x_i - y|) against the
    piecewise-linear interpolant of ``u`` on a uniform grid.
    """
    u = np.asarray(u)
    c_f = np.empty_like(u)
    c_f[..., 0] = 0.0
    c_f[..., 1:] = w_far * u[..., :-1] + w_near * u[..., 1:]
    fwd = linear_recurrence(c_f, rho)

    ur = u[..., ::-1]
    c_b = np.empty_like(u)
    c_b[..., 0] = 0.0
    c_b[..., 1:] = w_far * ur[..., :-1] + w_near * ur[..., 1:]
    bwd = linear_recurrence(c_b, rho)[..., ::-1]
    return fwd, bwd
