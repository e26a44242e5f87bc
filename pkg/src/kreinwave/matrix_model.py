"""Finite-dimensional instantiation of the abstract wave-equation framework.

Everything is exact linear algebra on C^N: B is a positive diagonal matrix,
C1/C2 are skew-Hermitian and commute with B and with each other, tau is a
full-row-rank trace map into C^m and Theta a Hermitian positive-definite
extension parameter.  The module builds the free, perturbed and generalized
wave resolvents plus the self-adjoint extension, and exposes residual
operations for every theorem-level identity that survives finite dimension.

Finite-dimensional caveat, by construction: the range condition that makes
the singular perturbation "strong" necessarily fails on C^N, so the assembled
perturbed resolvent is a pseudo-resolvent with the m-dimensional kernel
spanned by (-B^(-2) tau* d, 0, d).  All identities checked here (resolvent
identity, skew-adjointness in the weighted Gram, difference identity,
agreement on the common domain) hold regardless; the honest extension
operator lives in the charge-carrying picture, see :func:`w_theta_matrix`.
"""

from dataclasses import dataclass

import numpy as np

from .core import KreinFamily, check_lambda
from .errors import NotPositiveDefinite


def _is_skew_hermitian(a, tol=1e-12):
    return np.max(np.abs(a + a.conj().T)) <= tol * max(1.0, np.max(np.abs(a)))


@dataclass(frozen=True)
class MatrixModel:
    """Model data (b, C1, C2, tau, Theta); see module docstring for roles."""

    b: np.ndarray      # (N,) strictly positive diagonal of B
    c1: np.ndarray     # (N, N) skew-Hermitian
    c2: np.ndarray     # (N, N) skew-Hermitian
    tau: np.ndarray    # (m, N), rank m
    theta: np.ndarray  # (m, m) Hermitian positive definite

    def __post_init__(self):
        b = np.asarray(self.b, dtype=float)
        if b.ndim != 1 or np.any(b <= 0):
            raise ValueError("b must be a 1-d array of strictly positive entries")
        n = b.size
        c1 = np.asarray(self.c1, dtype=complex)
        c2 = np.asarray(self.c2, dtype=complex)
        tau = np.asarray(self.tau, dtype=complex)
        theta = np.asarray(self.theta, dtype=complex)
        if c1.shape != (n, n) or c2.shape != (n, n):
            raise ValueError("c1/c2 must be square of the same size as b")
        if not (_is_skew_hermitian(c1) and _is_skew_hermitian(c2)):
            raise ValueError("c1 and c2 must be skew-Hermitian")
        bmat = np.diag(b)
        for name, c in (("c1", c1), ("c2", c2)):
            if np.max(np.abs(bmat @ c - c @ bmat)) > 1e-10 * max(1.0, np.max(np.abs(c))):
                raise ValueError(f"{name} must commute with B")
        if np.max(np.abs(c1 @ c2 - c2 @ c1)) > 1e-10 * max(1.0, np.max(np.abs(c1 @ c2))):
            raise ValueError("c1 and c2 must commute")
        m = tau.shape[0]
        if tau.shape != (m, n):
            raise ValueError("tau must be (m, N)")
        if np.linalg.matrix_rank(tau, tol=1e-10) != m:
            raise ValueError("tau must have full row rank")
        if theta.shape != (m, m) or np.max(np.abs(theta - theta.conj().T)) > 1e-12:
            raise ValueError("theta must be Hermitian")
        if np.min(np.linalg.eigvalsh(theta)) <= 0:
            raise ValueError("theta must be positive definite")
        binv = 1.0 / b
        norm1 = np.linalg.norm(c1 * binv[None, :], 2)
        norm2 = np.linalg.norm(c2 * binv[None, :], 2)
        if norm1 * norm2 >= 1.0:
            raise ValueError("drift bound violated: ||C1 B^-1|| ||C2 B^-1|| must be < 1")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "theta", theta)

    @property
    def n(self) -> int:
        return self.b.size

    @property
    def m(self) -> int:
        return self.tau.shape[0]

    @property
    def c(self) -> np.ndarray:
        return self.c1 + self.c2


def random_model(seed, n: int = 6, m: int = 2, drift: bool = True) -> MatrixModel:
    """Seeded random model satisfying every structural hypothesis exactly.

    Commutation is built in: B is scalar on 2x2 blocks and both C's are real
    multiples of one block-diagonal skew-Hermitian S plus imaginary multiples
    of the identity, then rescaled so the product of relative drift bounds
    stays below 0.8.
    """
    rng = np.random.default_rng(seed)
    b = np.empty(n)
    s = np.zeros((n, n), dtype=complex)
    i = 0
    while i < n:
        if i + 1 < n:
            val = rng.uniform(0.5, 2.5)
            b[i] = b[i + 1] = val
            a11, a22 = rng.normal(size=2)
            re, im = rng.normal(size=2)
            s[i, i] = 1j * a11
            s[i + 1, i + 1] = 1j * a22
            s[i, i + 1] = re + 1j * im
            s[i + 1, i] = -re + 1j * im
            i += 2
        else:
            b[i] = rng.uniform(0.5, 2.5)
            s[i, i] = 1j * rng.normal()
            i += 1
    if drift:
        p1, p2 = rng.normal(size=2)
        q1, q2 = rng.normal(size=2)
        c1 = p1 * s + 1j * q1 * np.eye(n)
        c2 = p2 * s + 1j * q2 * np.eye(n)
        binv = 1.0 / b
        for c in (c1, c2):
            nrm = np.linalg.norm(c * binv[None, :], 2)
            if nrm > 0:
                c *= rng.uniform(0.3, 0.85) / nrm
    else:
        c1 = np.zeros((n, n), dtype=complex)
        c2 = np.zeros((n, n), dtype=complex)
    tau = rng.normal(size=(m, n)) + 1j * rng.normal(size=(m, n))
    a = rng.normal(size=(m, m)) + 1j * rng.normal(size=(m, m))
    theta = a @ a.conj().T + 0.5 * np.eye(m)
    return MatrixModel(b=b, c1=c1, c2=c2, tau=tau, theta=theta)


# -- inner products ---------------------------------------------------------

def energy_gram(model: MatrixModel, variant: str) -> np.ndarray:
    """Gram matrix of the energy inner product.

    plain       on (phi, psi):        <B phi, B phi'> + <psi, psi'>
    theta       on (phi, psi, zeta):  plain + <Theta zeta, zeta'>
    c_weighted  on (phi, psi):        <B_C phi, B_C phi'> + <psi + C2 phi, psi' + C2 phi'>
    c_theta     on (phi, psi, zeta):  c_weighted + <Theta zeta, zeta'>
    """
    n = model.n
    b2 = np.diag(model.b**2).astype(complex)
    eye = np.eye(n, dtype=complex)
    if variant == "plain":
        return _blockdiag(b2, eye)
    if variant == "theta":
        return _blockdiag(b2, eye, model.theta)
    if variant in ("c_weighted", "c_theta"):
        bc2 = b2 + model.c1 @ model.c2
        c2m = model.c2
        top = bc2 + c2m.conj().T @ c2m
        gram = np.block([[top, c2m.conj().T], [c2m, eye]])
        if variant == "c_theta":
            gram = _blockdiag(gram, model.theta)
        try:
            np.linalg.cholesky(gram)
        except np.linalg.LinAlgError as exc:
            raise NotPositiveDefinite(
                "C-weighted energy form is not positive definite; "
                "the drift bound c1*c2 < 1 must have failed"
            ) from exc
        return gram
    raise ValueError(f"unknown gram variant {variant!r}")


def _blockdiag(*blocks):
    dims = [b.shape[0] for b in blocks]
    out = np.zeros((sum(dims), sum(dims)), dtype=complex)
    pos = 0
    for b, d in zip(blocks, dims):
        out[pos:pos + d, pos:pos + d] = b
        pos += d
    return out


def adjoint_wrt(gram_out: np.ndarray, gram_in: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Adjoint of a: (V, gram_in) -> (W, gram_out), i.e. gram_in^-1 a^H gram_out."""
    return np.linalg.solve(gram_in, a.conj().T @ gram_out)


# -- free and perturbed wave resolvents (no drift) --------------------------

def r0_diag(model: MatrixModel, lam: float) -> np.ndarray:
    return 1.0 / (model.b**2 + lam**2)


def free_wave_resolvent(model: MatrixModel, lam: float) -> np.ndarray:
    """(-W + lam)^(-1) on (phi, psi) for W(phi, psi) = (psi, -B^2 phi)."""
    lam = check_lambda(lam)
    r0 = np.diag(r0_diag(model, lam)).astype(complex)
    n = model.n
    eye = np.eye(n, dtype=complex)
    return np.block([[lam * r0, r0], [-eye + lam**2 * r0, lam * r0]])


def tilde_free_resolvent(model: MatrixModel, lam: float) -> np.ndarray:
    """Free resolvent on (phi, psi, zeta): wave blocks plus zeta/lam."""
    lam = check_lambda(lam)
    return _blockdiag(free_wave_resolvent(model, lam), np.eye(model.m, dtype=complex) / lam)


def g_breve_theta(model: MatrixModel, lam: float) -> np.ndarray:
    """Coupling (phi, psi, zeta) -> aux:  lam tau R0 phi + tau R0 psi - Theta zeta / lam."""
    lam = check_lambda(lam)
    tr0 = model.tau * r0_diag(model, lam)[None, :]
    return np.hstack([lam * tr0, tr0, -model.theta / lam])


def g_theta(model: MatrixModel, lam: float) -> np.ndarray:
    """Coupling aux -> (phi, psi, zeta): (lam B^-2 R0 tau*, -R0 tau*, -1/lam)."""
    lam = check_lambda(lam)
    r0t = r0_diag(model, lam)[:, None] * model.tau.conj().T
    binv2 = (1.0 / model.b**2)[:, None]
    return np.vstack([lam * binv2 * r0t, -r0t, -np.eye(model.m) / lam])


def gamma_theta(model: MatrixModel, lam: float) -> np.ndarray:
    """Gamma(lam) = -lam tau B^-2 R0(lam) tau* - Theta / lam."""
    lam = check_lambda(lam)
    w = r0_diag(model, lam) / model.b**2
    return -lam * (model.tau * w[None, :]) @ model.tau.conj().T - model.theta / lam


def perturbed_wave_resolvent(model: MatrixModel, lam: float) -> np.ndarray:
    """Krein-corrected resolvent of the charge-extended wave operator."""
    lam = check_lambda(lam)
    corr = g_theta(model, lam) @ np.linalg.solve(
        gamma_theta(model, lam), g_breve_theta(model, lam)
    )
    return tilde_free_resolvent(model, lam) + corr


def krein_family(model: MatrixModel) -> KreinFamily:
    """The perturbed wave family packaged for the generic core."""
    return KreinFamily(
        r0=lambda lam: (lambda x, _m=tilde_free_resolvent(model, lam): _m @ x),
        g=lambda lam: (lambda z, _m=g_theta(model, lam): _m @ z),
        g_breve=lambda lam: (lambda x, _m=g_breve_theta(model, lam): _m @ x),
        gamma=lambda lam: gamma_theta(model, lam),
        aux_dim=model.m,
    )


# -- self-adjoint extension -------------------------------------------------

def charge_map(model: MatrixModel) -> np.ndarray:
    """Z with zeta = Z phi: the charge of phi in the decomposition phi = phi0 + G zeta."""
    g_sing = (1.0 / model.b**2)[:, None] * model.tau.conj().T  # B^-2 tau*
    return np.linalg.solve(model.theta + model.tau @ g_sing, model.tau)


def a_theta_matrix(model: MatrixModel) -> np.ndarray:
    """Extension operator A_Theta = -B^2 + tau* Z on C^N (negative, injective)."""
    return -np.diag(model.b**2).astype(complex) + model.tau.conj().T @ charge_map(model)


def a_theta_resolvent(model: MatrixModel, lam: float) -> np.ndarray:
    """(-A_Theta + lam^2)^(-1) = R0 + G (Theta + lam^2 tau B^-2 G)^(-1) G_breve."""
    lam = check_lambda(lam)
    r0 = r0_diag(model, lam)
    g = r0[:, None] * model.tau.conj().T
    middle = model.theta + lam**2 * (model.tau * (r0 / model.b**2)[None, :]) @ model.tau.conj().T
    return np.diag(r0).astype(complex) + g @ np.linalg.solve(middle, model.tau * r0[None, :])


def quadratic_form_residual(model: MatrixModel, phi: np.ndarray) -> float:
    """|<-A_Theta phi, phi> - (||B phi0||^2 + <Theta zeta, zeta>)| / scale."""
    zeta = charge_map(model) @ phi
    phi0 = phi - (1.0 / model.b**2) * (model.tau.conj().T @ zeta)
    lhs = np.vdot(phi, -a_theta_matrix(model) @ phi)
    rhs = np.vdot(model.b * phi0, model.b * phi0) + np.vdot(zeta, model.theta @ zeta)
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def w_theta_matrix(model: MatrixModel) -> np.ndarray:
    """Wave generator of the extension in the charge-carrying picture: [[0, I], [A_Theta, 0]]."""
    n = model.n
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    out[:n, n:] = np.eye(n)
    out[n:, :n] = a_theta_matrix(model)
    return out


def w_theta_gram(model: MatrixModel) -> np.ndarray:
    """Energy Gram in the charge-carrying picture: ||B phi0||^2 + <Theta zeta, zeta> + ||psi||^2."""
    z = charge_map(model)
    proj0 = np.eye(model.n) - (1.0 / model.b**2)[:, None] * (model.tau.conj().T @ z)
    top = proj0.conj().T @ np.diag(model.b**2) @ proj0 + z.conj().T @ model.theta @ z
    return _blockdiag(top, np.eye(model.n, dtype=complex))


# -- generalized (drifted) wave equation ------------------------------------

def generalized_r(model: MatrixModel, lam: float) -> np.ndarray:
    """R(lam) = (B^2 - lam C + lam^2)^(-1) with C = C1 + C2."""
    lam = check_lambda(lam)
    n = model.n
    return np.linalg.inv(np.diag(model.b**2) - lam * model.c + lam**2 * np.eye(n))


def generalized_resolvent(model: MatrixModel, lam: float) -> np.ndarray:
    """(-W_g + lam)^(-1) for W_g(phi, psi) = (psi, C psi - B^2 phi)."""
    lam = check_lambda(lam)
    n = model.n
    r = generalized_r(model, lam)
    eye = np.eye(n, dtype=complex)
    rc = r @ model.c
    return np.block([
        [lam * r - rc, r],
        [-eye + lam**2 * r - lam * rc, lam * r],
    ])


def w_g_matrix(model: MatrixModel) -> np.ndarray:
    """W_g as a block matrix [[0, I], [-B^2, C]]."""
    n = model.n
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    out[:n, n:] = np.eye(n)
    out[n:, :n] = -np.diag(model.b**2)
    out[n:, n:] = model.c
    return out


def g_generalized(model: MatrixModel, lam: float) -> np.ndarray:
    """G(lam) = R(-lam)* tau* (= R(lam) tau* since B is Hermitian and C skew)."""
    return generalized_r(model, lam) @ model.tau.conj().T


def gamma_theta_generalized(model: MatrixModel, lam: float) -> np.ndarray:
    """Gamma(lam) = -tau B^-1 (-C + lam) B^-1 G(lam) - Theta / lam."""
    lam = check_lambda(lam)
    binv = (1.0 / model.b)[:, None]
    g = g_generalized(model, lam)
    mid = binv * ((-model.c + lam * np.eye(model.n)) @ (binv * g))
    return -model.tau @ mid - model.theta / lam


def c_adjoint_residual(model: MatrixModel) -> float:
    """Residual of the drift adjoint formula C* = -B^-1 C B^-1 (energy-space adjoint).

    The adjoint is taken C: (C^N, <B., B.>) -> (C^N, <., .>); via Gram
    conjugation that is B^-2 C^H.
    """
    via_gram = np.linalg.solve(np.diag(model.b**2), model.c.conj().T)
    binv = (1.0 / model.b)[:, None]
    formula = -(binv * model.c) * (1.0 / model.b)[None, :]
    scale = max(np.max(np.abs(formula)), 1e-300)
    return float(np.max(np.abs(via_gram - formula))) / scale


def g_breve_theta_generalized(model: MatrixModel, lam: float) -> np.ndarray:
    """(phi, psi, zeta) -> aux coupling of the drifted family."""
    lam = check_lambda(lam)
    tr = model.tau @ generalized_r(model, lam)
    return np.hstack([lam * tr - tr @ model.c, tr, -model.theta / lam])


def g_theta_generalized(model: MatrixModel, lam: float) -> np.ndarray:
    """aux -> (phi, psi, zeta) coupling: (B^-1 (-C + lam) B^-1 G, -G, -1/lam)."""
    lam = check_lambda(lam)
    g = g_generalized(model, lam)
    binv = (1.0 / model.b)[:, None]
    top = binv * ((-model.c + lam * np.eye(model.n)) @ (binv * g))
    return np.vstack([top, -g, -np.eye(model.m) / lam])


def tilde_generalized_free_resolvent(model: MatrixModel, lam: float) -> np.ndarray:
    lam = check_lambda(lam)
    return _blockdiag(generalized_resolvent(model, lam), np.eye(model.m, dtype=complex) / lam)


def perturbed_generalized_resolvent(model: MatrixModel, lam: float) -> np.ndarray:
    """Krein-corrected resolvent of the drifted charge-extended wave operator."""
    lam = check_lambda(lam)
    corr = g_theta_generalized(model, lam) @ np.linalg.solve(
        gamma_theta_generalized(model, lam), g_breve_theta_generalized(model, lam)
    )
    return tilde_generalized_free_resolvent(model, lam) + corr


def krein_family_generalized(model: MatrixModel) -> KreinFamily:
    return KreinFamily(
        r0=lambda lam: (lambda x, _m=tilde_generalized_free_resolvent(model, lam): _m @ x),
        g=lambda lam: (lambda z, _m=g_theta_generalized(model, lam): _m @ z),
        g_breve=lambda lam: (lambda x, _m=g_breve_theta_generalized(model, lam): _m @ x),
        gamma=lambda lam: gamma_theta_generalized(model, lam),
        aux_dim=model.m,
    )


# -- two-drift structure: B_C, S-conjugation, lambda-free action ------------

def bc_matrix(model: MatrixModel) -> np.ndarray:
    """B_C = (B^2 + C1 C2)^(1/2) via Hermitian eigendecomposition."""
    h = np.diag(model.b**2) + model.c1 @ model.c2
    vals, vecs = np.linalg.eigh(h)
    if np.min(vals) <= 0:
        raise NotPositiveDefinite("B^2 + C1 C2 must be positive definite")
    return (vecs * np.sqrt(vals)[None, :]) @ vecs.conj().T


def rc_matrix(model: MatrixModel, lam: float) -> np.ndarray:
    """(B^2 + (-C1 + lam)(-C2 + lam))^(-1) = (B_C^2 - lam C + lam^2)^(-1)."""
    lam = check_lambda(lam)
    n = model.n
    mat = np.diag(model.b**2) + (lam * np.eye(n) - model.c1) @ (lam * np.eye(n) - model.c2)
    return np.linalg.inv(mat)


def gc_assembled(model: MatrixModel, lam: float) -> np.ndarray:
    """G_C(lam) + lam B_C^-1 (-C + lam) B_C^-1 G_C(lam); lambda-independent."""
    lam = check_lambda(lam)
    gc = rc_matrix(model, lam) @ model.tau.conj().T
    bc_inv = np.linalg.inv(bc_matrix(model))
    return gc + lam * bc_inv @ ((-model.c + lam * np.eye(model.n)) @ (bc_inv @ gc))


def gc_lambda_independence_residual(model: MatrixModel, lam: float, mu: float) -> float:
    """Max-entry relative difference of the assembled singular profile at two lambdas.

    Covers both the drifted profile (through B_C) and, when C = 0, the plain
    G(lam) + lam^2 B^-2 G(lam) combination.
    """
    lam = check_lambda(lam)
    mu = check_lambda(mu)
    a = gc_assembled(model, lam)
    b = gc_assembled(model, mu)
    scale = max(np.max(np.abs(a)), np.max(np.abs(b)), 1e-300)
    return float(np.max(np.abs(a - b))) / scale


def s_conjugation_residual(model: MatrixModel) -> float:
    """Unitarity of S(phi, psi) = (phi, psi - C2 phi) plus the conjugated action.

    Checks S^H Gram_C S = blockdiag(B_C^2, I) and
    S W_g S^(-1) = [[C2, I], [-B^2, C1]].
    """
    n = model.n
    eye = np.eye(n, dtype=complex)
    s = np.block([[eye, np.zeros((n, n))], [-model.c2, eye]])
    s_inv = np.block([[eye, np.zeros((n, n))], [model.c2, eye]])
    gram_c = energy_gram(model, "c_weighted")
    bc = bc_matrix(model)
    target_gram = _blockdiag(bc @ bc, eye)
    w_g = np.zeros((2 * n, 2 * n), dtype=complex)
    w_g[:n, n:] = eye
    w_g[n:, :n] = -(np.diag(model.b**2) + model.c1 @ model.c2)
    w_g[n:, n:] = model.c
    conj = s @ w_g @ s_inv
    target_w = np.block([[model.c2, eye], [-np.diag(model.b**2).astype(complex), model.c1]])
    r1 = np.max(np.abs(s.conj().T @ gram_c @ s - target_gram)) / max(np.max(np.abs(target_gram)), 1e-300)
    r2 = np.max(np.abs(conj - target_w)) / max(np.max(np.abs(target_w)), 1e-300)
    return float(max(r1, r2))


def tilde_w_theta_action_residual(model: MatrixModel, lam: float, lam2: float, seed: int = 0) -> float:
    """Consistency of the extension's action: lambda chart vs lambda-free form.

    Builds a domain vector from free chart data (phi_lam, psi_lam, zeta_psi) at
    ``lam``, applies (a) the lambda-dependent action of the two-drift domain
    theorem, (b) the lambda-free action through the assembled profile G_C, and
    (c) the lambda-dependent action re-derived in the ``lam2`` chart of the
    same vector.  Returns the worst relative mismatch.
    """
    lam = check_lambda(lam)
    lam2 = check_lambda(lam2)
    rng = np.random.default_rng(seed)
    n, m = model.n, model.m
    phi_l = rng.normal(size=n) + 1j * rng.normal(size=n)
    psi_l = rng.normal(size=n) + 1j * rng.normal(size=n)
    zeta_psi = rng.normal(size=m) + 1j * rng.normal(size=m)

    bc = bc_matrix(model)
    bc_inv = np.linalg.inv(bc)
    c = model.c
    b2 = np.diag(model.b**2).astype(complex)

    def charts(lmb):
        gc = rc_matrix(model, lmb) @ model.tau.conj().T
        mix = bc_inv @ (c @ (bc_inv @ gc))          # B_C^-1 C B_C^-1 G_C(lam)
        drift_mix = bc_inv @ ((-c + lmb * np.eye(n)) @ (bc_inv @ gc))
        return gc, mix, drift_mix

    gc_l, mix_l, drift_l = charts(lam)
    phi0 = phi_l + mix_l @ zeta_psi
    psi0 = psi_l + gc_l @ zeta_psi - model.c2 @ (mix_l @ zeta_psi)

    def action(phi_lam, psi_lam, drift, lmb):
        first = model.c2 @ phi_lam + psi_lam - lmb * (drift @ zeta_psi)
        second = model.c1 @ psi_lam - b2 @ phi_lam + lmb * model.c2 @ (drift @ zeta_psi)
        return first, second

    a1_first, a1_second = action(phi_l, psi_l, drift_l, lam)

    gc_free = gc_assembled(model, lam)              # lambda-independent profile
    f_first = model.c2 @ phi0 + psi0 - gc_free @ zeta_psi
    f_second = model.c1 @ psi0 - b2 @ phi0 + model.c2 @ (gc_free @ zeta_psi)

    gc_2, mix_2, drift_2 = charts(lam2)
    phi_l2 = phi0 - mix_2 @ zeta_psi
    psi_l2 = psi0 - gc_2 @ zeta_psi + model.c2 @ (mix_2 @ zeta_psi)
    a2_first, a2_second = action(phi_l2, psi_l2, drift_2, lam2)

    scale = max(
        np.max(np.abs(a1_first)), np.max(np.abs(a1_second)), 1e-300
    )
    worst = max(
        np.max(np.abs(a1_first - f_first)),
        np.max(np.abs(a1_second - f_second)),
        np.max(np.abs(a1_first - a2_first)),
        np.max(np.abs(a1_second - a2_second)),
    )
    return float(worst) / scale


# -- serialization ----------------------------------------------------------

def _carr_to_jsonable(a: np.ndarray):
    a = np.asarray(a)
    if np.iscomplexobj(a):
        return {"re": a.real.tolist(), "im": a.imag.tolist()}
    return a.tolist()


def _carr_from_jsonable(obj) -> np.ndarray:
    if isinstance(obj, dict):
        return np.asarray(obj["re"]) + 1j * np.asarray(obj["im"])
    return np.asarray(obj, dtype=float)


def model_to_jsonable(model: MatrixModel) -> dict:
    return {
        "b": model.b.tolist(),
        "c1": _carr_to_jsonable(model.c1),
        "c2": _carr_to_jsonable(model.c2),
        "tau": _carr_to_jsonable(model.tau),
        "theta": _carr_to_jsonable(model.theta),
    }


def model_from_jsonable(obj: dict) -> MatrixModel:
    return MatrixModel(
        b=np.asarray(obj["b"], dtype=float),
        c1=_carr_from_jsonable(obj["c1"]),
        c2=_carr_from_jsonable(obj["c2"]),
        tau=_carr_from_jsonable(obj["tau"]),
        theta=_carr_from_jsonable(obj["theta"]),
    )
