"""The (1/2,0) + (0,1/2) sector: gamma matrices, direct-sum spin, gamma-tilde, spinors, parity.

Chiral basis with spinors ordered (Psi-, Psi+):
    gamma0 = [[0, I], [I, 0]],  gamma^k = [[0, sigma^k], [-sigma^k, 0]],
    gamma5 = diag(-I, I) = i gamma0 gamma1 gamma2 gamma3.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .minkowski import EPS3, METRIC, MomentumContext
from .numkit import anticommutator, commutator, direct_sum, identity, lstsq_fit, mat_exp, norm_inf
from .spin_reps import PAULI, make_spin_rep, pl_components, spin_operators

I2 = np.eye(2, dtype=np.complex128)
Z2 = np.zeros((2, 2), dtype=np.complex128)


class ConstructionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class DiracBasis:
    gamma: tuple  # gamma^0..gamma^3
    gamma5: np.ndarray
    alpha: tuple
    beta: np.ndarray
    Sigma: tuple
    sigma_tensor: np.ndarray  # [rho, sigma] -> (i/4)[gamma^rho, gamma^sigma]

    def slash(self, four_vector_upper) -> np.ndarray:
        """gamma^mu a_mu for a contravariant four-vector a^mu."""
        a = METRIC @ np.asarray(four_vector_upper, dtype=float)
        return sum(self.gamma[mu] * a[mu] for mu in range(4))


@lru_cache(maxsize=None)
def dirac_basis() -> DiracBasis:
    g0 = np.block([[Z2, I2], [I2, Z2]])
    gk = tuple(np.block([[Z2, s], [-s, Z2]]) for s in PAULI)
    gamma = (g0,) + gk
    g5 = np.block([[-I2, Z2], [Z2, I2]])
    alpha = tuple(g0 @ g for g in gk)
    Sigma = tuple(g5 @ a for a in alpha)
    st = np.empty((4, 4, 4, 4), dtype=np.complex128)
    for r in range(4):
        for s in range(4):
            st[r, s] = 0.25j * commutator(gamma[r], gamma[s])
    return DiracBasis(gamma, g5, alpha, g0, Sigma, st)


def clifford_residual(gammas) -> float:
    """max over mu, nu of |{g^mu, g^nu} - 2 g^{mu nu} I|."""
    n = gammas[0].shape[0]
    return max(
        norm_inf(anticommutator(gammas[mu], gammas[nu]) - 2 * METRIC[mu, nu] * identity(n))
        for mu in range(4)
        for nu in range(4)
    )


def boost_4(ctx: MomentumContext) -> np.ndarray:
    """U[L(p)] = U-[L(p)] + U+[L(p)] (block diagonal)."""
    gen = sum(PAULI[k] * ctx.xi[k] for k in range(3)) / 2
    return direct_sum(mat_exp(-gen), mat_exp(gen))


def direct_sum_spin(ctx: MomentumContext) -> tuple:
    """Block-diagonal S^k = S-^k + S+^k (upper block left-handed)."""
    ops = spin_operators(ctx, make_spin_rep(0.5))
    return tuple(direct_sum(ops.minus[k], ops.plus[k]) for k in range(3))


def direct_sum_spin_gamma5(ctx: MomentumContext) -> tuple:
    """Same operator as (p0 w^k - p^k w^0)/m^2 + i gamma5 eps_{kml} w^m p^l / m^2."""
    b = dirac_basis()
    m, p, p0 = ctx.m, ctx.p, ctx.p0
    pl = pl_components(ctx, make_spin_rep(0.5))
    w0 = direct_sum(pl.w0, pl.w0)
    w = [direct_sum(x, x) for x in pl.w]
    out = []
    for k in range(3):
        eps = sum(EPS3[k, mm, ll] * w[mm] * p[ll] for mm in range(3) for ll in range(3))
        out.append((p0 * w[k] - p[k] * w0) / m ** 2 + 1j * b.gamma5 @ eps / m ** 2)
    return tuple(out)


def gamma_tilde(ctx: MomentumContext, *, check_tol: float = 1e-9) -> tuple:
    """gamma-tilde^0 = gamma^0, gamma-tilde^k(p) = [[0, 2 S+^k], [-2 S-^k, 0]].

    The off-diagonal tensor acts as +S+ on the lower (right-handed) block and
    as -S- on the upper block. This is the only sign pattern for which
    gamma-tilde(p).p equals gamma.p as a matrix; the constructor verifies it.
    """
    b = dirac_basis()
    ops = spin_operators(ctx, make_spin_rep(0.5))
    gt = (b.gamma[0],) + tuple(np.block([[Z2, 2 * ops.plus[k]], [-2 * ops.minus[k], Z2]]) for k in range(3))
    k = ctx.four_momentum
    r = norm_inf(slash_with(gt, k) - b.slash(k))
    if r > check_tol * max(1.0, ctx.p0 ** 2):
        raise ConstructionError(f"gamma-tilde . p differs from gamma . p by {r:.3e}")
    return gt


def slash_with(gammas, four_vector_upper) -> np.ndarray:
    a = METRIC @ np.asarray(four_vector_upper, dtype=float)
    return sum(gammas[mu] * a[mu] for mu in range(4))


def rest_spinor_component(lam: float) -> np.ndarray:
    """chi_lambda: sigma3 eigenvector with eigenvalue 2*lambda."""
    if lam == 0.5:
        return np.array([1.0, 0.0], dtype=np.complex128)
    if lam == -0.5:
        return np.array([0.0, 1.0], dtype=np.complex128)
    raise ValueError(f"lambda must be +/-1/2, got {lam}")


LAMBDAS = (0.5, -0.5)


def dirac_spinors(ctx: MomentumContext):
    """u(p, l) = U[L(p)] (chi_l, chi_l) and v(p, l) = U[L(p)]^-1 (chi_l, -chi_l).

    Normalisation: ubar u = 2, vbar v = -2, u^dag u = v^dag v = 2 p0 / m.
    v spans the -p0 eigenspace of the free Hamiltonian.
    """
    U = boost_4(ctx)
    Uinv = np.linalg.inv(U)
    u = {lam: U @ np.concatenate([rest_spinor_component(lam)] * 2) for lam in LAMBDAS}
    v = {
        lam: Uinv @ np.concatenate([rest_spinor_component(lam), -rest_spinor_component(lam)]) for lam in LAMBDAS
    }
    return u, v


def bar(x) -> np.ndarray:
    return x.conj() @ dirac_basis().gamma[0]


@dataclass(frozen=True)
class DiracContext:
    ctx: MomentumContext
    spin: tuple
    gamma_tilde: tuple
    U: np.ndarray
    u: dict
    v: dict


def dirac_context(ctx: MomentumContext) -> DiracContext:
    u, v = dirac_spinors(ctx)
    return DiracContext(ctx, direct_sum_spin(ctx), gamma_tilde(ctx), boost_4(ctx), u, v)


def fundamental_equation_residual(dctx: DiracContext, state, *, momentum: MomentumContext | None = None) -> float:
    """|(gamma-tilde^mu(p) p_mu - m) state|; ``momentum`` overrides p (for parity-inverted states)."""
    ctx = momentum or dctx.ctx
    gt = dctx.gamma_tilde if momentum is None else gamma_tilde(momentum)
    return norm_inf((slash_with(gt, ctx.four_momentum) - ctx.m * identity(4)) @ np.asarray(state))


def covariant_parity(ctx: MomentumContext) -> np.ndarray:
    """Covariant parity operator acting chirality-block-wise.

    The block acting on Psi- is (p0 + sigma.p)/m, the block acting on Psi+ is
    (p0 - sigma.p)/m, so each maps Psi+/- to Psi-/+. In this basis that is
    (p0 - gamma5 Sigma.p)/m.
    """
    sp = sum(PAULI[k] * ctx.p[k] for k in range(3))
    return direct_sum(ctx.p0 * I2 + sp, ctx.p0 * I2 - sp) / ctx.m


def covariant_parity_displayed(ctx: MomentumContext) -> np.ndarray:
    """(p0 + Sigma^k p^k gamma5)/m evaluated literally with gamma5 = diag(-I, I)."""
    b = dirac_basis()
    Sp = sum(b.Sigma[k] * ctx.p[k] for k in range(3))
    return (ctx.p0 * identity(4) + Sp @ b.gamma5) / ctx.m


def parity_squared_boost(ctx: MomentumContext, handedness: int) -> np.ndarray:
    """U+/-^2 in the closed form cosh|xi| +/- (sigma.p_hat) sinh|xi|."""
    if ctx.pmag == 0:
        return I2.copy()
    sp = sum(PAULI[k] * ctx.p[k] for k in range(3)) / ctx.pmag
    xi = ctx.rapidity
    return np.cosh(xi) * I2 + handedness * np.sinh(xi) * sp


def parity_nonexistence_fit(ctx: MomentumContext, s=1, handedness: int = 1):
    """Least-squares residuals of U^2 = exp(+/-2 J.xi) against polynomials in J.p_hat.

    Returns (linear_residual, full_residual): the fit on {I, J.p_hat} and on
    {I, J.p_hat, ..., (J.p_hat)^(2s)}. The linear fit is exact only for s = 1/2.
    """
    if ctx.pmag == 0:
        raise ValueError("momentum must be non-zero")
    rep = make_spin_rep(s)
    n = ctx.p / ctx.pmag
    Jn = rep.dot(n)
    target = mat_exp(2 * handedness * rep.dot(ctx.xi))
    powers = [identity(rep.dim)]
    for _ in range(rep.dim - 1):
        powers.append(powers[-1] @ Jn)
    linear = lstsq_fit(target, powers[:2]).residual
    full = lstsq_fit(target, powers).residual
    return linear, full
