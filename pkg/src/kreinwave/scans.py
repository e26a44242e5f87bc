"""Exponential-kernel quadrature on uniform grids.

Everything here evaluates integrals of exp(-lam*|x-y|)-type kernels against
the piecewise-linear interpolant of sampled data.  Per panel the kernel is
integrated exactly, so the quadrature error is the O(h^2) interpolation error
of the data, uniformly in lam*h.  That makes the rules safe for the large
spectral parameters (lam = 2/dt) used by Cayley time stepping.

The serial recurrences are the hot loop of every time step; they live in the
compiled extension ``kreinwave._scan`` with a scipy fallback selected here at
import time (set KREINWAVE_PURE=1 to force the fallback).
"""

import os

import numpy as np

from . import _scan_py

try:
    from . import _scan  # type: ignore[attr-defined]
except ImportError:
    _scan = None

if _scan is not None and not os.environ.get("KREINWAVE_PURE"):
    _impl = _scan
else:
    _impl = _scan_py

HAVE_COMPILED = _scan is not None
IMPL = _impl.IMPL


def panel_weights(z: float) -> tuple[float, float]:
    """Per-unit-h panel weights (far, near) for kernel exp(-z*w), w in [0,1].

    far  = int_0^1 w*exp(-z*w) dw        (weight of the node away from the peak)
    near = int_0^1 (1-w)*exp(-z*w) dw    (weight of the node at the peak)
    """
    if z < 0:
        raise ValueError("panel weight parameter must be nonnegative")
    if z < 1e-2:
        # series; the closed forms cancel catastrophically as z -> 0
        far = 1 / 2 - z / 3 + z**2 / 8 - z**3 / 30 + z**4 / 144
        near = 1 / 2 - z / 6 + z**2 / 24 - z**3 / 120 + z**4 / 720
        return far, near
    ez = np.exp(-z)
    far = (1.0 - (1.0 + z) * ez) / z**2
    near = (z - 1.0 + ez) / z**2
    return far, near


def _check(h: float, lam: float) -> None:
    if h <= 0:
        raise ValueError("grid spacing must be positive")
    if lam <= 0:
        raise ValueError("decay rate must be positive for exponential scans")


def exp_scans(u: np.ndarray, h: float, lam: float):
    """Forward/backward scans of exp(-lam*|x_i - y|) against interp(u).

    fwd[i] = int_0^{x_i} exp(-lam*(x_i-y)) u~(y) dy
    bwd[i] = int_{x_i}^{L} exp(-lam*(y-x_i)) u~(y) dy

    with u~ the piecewise-linear interpolant on x_i = i*h.
    """
    _check(h, lam)
    z = lam * h
    far, near = panel_weights(z)
    rho = np.exp(-z)
    u = np.asarray(u)
    if np.iscomplexobj(u):
        return _scan_py.fused_exp_scans(u, h * far, h * near, rho)
    return _impl.fused_exp_scans(u, h * far, h * near, rho)


def exp_kernel_apply(u: np.ndarray, h: float, lam: float) -> np.ndarray:
    """v[i] = int_0^L exp(-lam*|x_i - y|) u~(y) dy."""
    fwd, bwd = exp_scans(u, h, lam)
    return fwd + bwd


def decay_functional(u: np.ndarray, h: float, lam: float):
    """int_0^L exp(-lam*y) u~(y) dy  (scalar per leading row of u)."""
    _, bwd = exp_scans(u, h, lam)
    return bwd[..., 0]


def dirichlet_apply(u: np.ndarray, h: float, lam: float) -> np.ndarray:
    """Apply the half-line Dirichlet kernel (exp(-lam|x-y|) - exp(-lam(x+y)))/(2 lam).

    This is the resolvent (-d^2/dx^2 + lam^2)^(-1) with a zero boundary value
    at x = 0, evaluated on the interpolant of ``u``.
    """
    fwd, bwd = exp_scans(u, h, lam)
    n = np.asarray(u).shape[-1]
    x = h * np.arange(n)
    return (fwd + bwd - np.exp(-lam * x) * bwd[..., :1]) / (2.0 * lam)
