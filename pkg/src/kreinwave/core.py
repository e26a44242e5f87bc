"""Generic assembly and verification of Krein-type resolvent formulas.

A resolvent family is a map lam -> linear map.  A :class:`KreinFamily` bundles
the four lam-dependent blocks (free resolvent, state<->auxiliary couplings and
the auxiliary-space matrix) from which the perturbed resolvent

    R_hat(lam) = R0(lam) + G(lam) Gamma(lam)^(-1) G_breve(lam)

is assembled.  Resolvents are callables (matrix-free), so the same machinery
serves dense matrix models and grid-kernel providers.  Residual helpers check
the algebraic identities a family claims over a documented probe basis; each
instantiation decides which identities apply to it (the sign conventions for
G versus G_breve differ between instantiations and are deliberately not
unified here).
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .errors import InadmissibleLambda, SingularGamma

LinearMap = Callable[[np.ndarray], np.ndarray]
ResolventProvider = Callable[[float], LinearMap]
InnerProduct = Callable[[np.ndarray, np.ndarray], complex]


def check_lambda(lam: float, *, positive: bool = False) -> float:
    """Validate a spectral parameter: real, nonzero, optionally positive."""
    lam = float(lam)
    if lam == 0.0:
        raise InadmissibleLambda("spectral parameter must be nonzero")
    if positive and lam < 0.0:
        raise InadmissibleLambda(
            "kernel provider uses |lambda| decay and requires lambda > 0"
        )
    return lam


def euclidean_ip(x: np.ndarray, y: np.ndarray) -> complex:
    return complex(np.vdot(x, y))


def gram_ip(gram: np.ndarray) -> InnerProduct:
    """Inner product <x, y> = x^H Gram y (conjugate-linear in x)."""

    def ip(x, y):
        return complex(np.vdot(x, gram @ y))

    return ip


@dataclass(frozen=True)
class KreinFamily:
    """The four lambda-dependent blocks of a Krein resolvent formula.

    r0       : lam -> linear map on the state space (free resolvent)
    g        : lam -> linear map auxiliary -> state
    g_breve  : lam -> linear map state -> auxiliary (returns an (m,) array)
    gamma    : lam -> (m, m) matrix on the auxiliary space
    aux_dim  : m
    is_admissible : predicate declaring the provider's admissible lambdas
    """

    r0: Callable[[float], LinearMap]
    g: Callable[[float], LinearMap]
    g_breve: Callable[[float], LinearMap]
    gamma: Callable[[float], np.ndarray]
    aux_dim: int
    is_admissible: Callable[[float], bool] = field(default=lambda lam: lam != 0)


def assemble_resolvent(kf: KreinFamily, lam: float, *, cond_cap: float = 1e12) -> LinearMap:
    """Assemble x -> R0(lam) x + G(lam) Gamma(lam)^(-1) G_breve(lam) x.

    Raises SingularGamma when Gamma(lam) is numerically singular (condition
    number above ``cond_cap``) and InadmissibleLambda outside the family's
    declared admissible set.
    """
    lam = check_lambda(lam)
    if not kf.is_admissible(lam):
        raise InadmissibleLambda(f"lambda = {lam} outside the admissible set")
    gamma = np.atleast_2d(np.asarray(kf.gamma(lam)))
    if gamma.shape != (kf.aux_dim, kf.aux_dim):
        raise ValueError("gamma block has wrong shape")
    if not np.all(np.isfinite(gamma)):
        raise SingularGamma("gamma contains non-finite entries")
    cond = np.linalg.cond(gamma)
    if not np.isfinite(cond) or cond > cond_cap:
        raise SingularGamma(f"gamma condition number {cond:.3e} exceeds cap {cond_cap:.1e}")
    lu = lu_factor(gamma)
    r0 = kf.r0(lam)
    g = kf.g(lam)
    g_breve = kf.g_breve(lam)

    def apply(x: np.ndarray) -> np.ndarray:
        charge = lu_solve(lu, np.atleast_1d(g_breve(x)))
        return r0(x) + g(charge)

    return apply


def resolvent_identity_residual(
    r_provider: ResolventProvider,
    lam: float,
    mu: float,
    probes: Sequence[np.ndarray],
) -> float:
    """Relative max-norm residual of (lam-mu) R(mu) R(lam) - (R(mu) - R(lam))."""
    lam = check_lambda(lam)
    mu = check_lambda(mu)
    if lam == mu:
        raise ValueError("resolvent identity needs two distinct parameters")
    r_lam = r_provider(lam)
    r_mu = r_provider(mu)
    worst = 0.0
    scale = 0.0
    for x in probes:
        a = r_lam(x)
        b = r_mu(x)
        diff = (lam - mu) * r_mu(a) - (b - a)
        worst = max(worst, float(np.max(np.abs(diff))))
        scale = max(scale, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    return worst / max(scale, 1e-300)


def skew_adjointness_residual(
    r_provider: ResolventProvider,
    lam: float,
    ip: InnerProduct,
    probes: Sequence[np.ndarray],
) -> float:
    """Relative residual of <R(lam)x, y> + <x, R(-lam)y> over probe pairs."""
    lam = check_lambda(lam)
    r_pos = r_provider(lam)
    r_neg = r_provider(-lam)
    images_pos = [r_pos(x) for x in probes]
    images_neg = [r_neg(y) for y in probes]
    worst = 0.0
    scale = 0.0
    for i, x in enumerate(probes):
        for j, y in enumerate(probes):
            t1 = ip(images_pos[i], y)
            t2 = ip(x, images_neg[j])
            worst = max(worst, abs(t1 + t2))
            scale = max(scale, abs(t1), abs(t2))
    return worst / max(scale, 1e-300)


def gamma_difference_residual(kf: KreinFamily, lam: float, mu: float) -> float:
    """Relative residual of Gamma(lam) - Gamma(mu) - (lam-mu) G_breve(mu) G(lam)."""
    lam = check_lambda(lam)
    mu = check_lambda(mu)
    if lam == mu:
        raise ValueError("difference identity needs two distinct parameters")
    m = kf.aux_dim
    gamma_l = np.atleast_2d(np.asarray(kf.gamma(lam)))
    gamma_m = np.atleast_2d(np.asarray(kf.gamma(mu)))
    g_lam = kf.g(lam)
    gb_mu = kf.g_breve(mu)
    cross = np.empty((m, m), dtype=complex)
    for j in range(m):
        e = np.zeros(m, dtype=complex)
        e[j] = 1.0
        cross[:, j] = np.atleast_1d(gb_mu(g_lam(e)))
    resid = gamma_l - gamma_m - (lam - mu) * cross
    scale = max(np.max(np.abs(gamma_l)), np.max(np.abs(gamma_m)), 1e-300)
    return float(np.max(np.abs(resid))) / scale


def cayley_step(r_provider: ResolventProvider, dt: float, state: np.ndarray) -> np.ndarray:
    """One energy-preserving Cayley step (I - dt/2 W)^(-1)(I + dt/2 W) state.

    Uses the identity (2 lam R(lam) - I) with lam = 2/dt; exact isometry of
    the generator's energy norm whenever R is its exact resolvent.
    """
    if dt <= 0:
        raise ValueError("time step must be positive")
    lam = 2.0 / dt
    r = r_provider(lam)
    return 2.0 * lam * r(state) - state
