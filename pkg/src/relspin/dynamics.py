"""Free Dirac dynamics: proper position operator, velocity, acceleration, Zitterbewegung traces.

The full position operator is X + M(p) with X = i d/dp the canonical part; only
the matrix part M(p) is represented. Expectation values use psi^dag psi.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import dirac_basis, dirac_spinors, direct_sum_spin
from .minkowski import EPS3, MomentumContext
from .numkit import commutator, eig_small, identity, mat_exp, norm_inf, spectrum_deviation
from .report import check

FD_STEP = 1e-5


def dirac_hamiltonian(ctx: MomentumContext) -> np.ndarray:
    """H = alpha.p + beta m."""
    b = dirac_basis()
    return sum(b.alpha[k] * ctx.p[k] for k in range(3)) + b.beta * ctx.m


@dataclass(frozen=True)
class EnergyProjectors:
    plus: np.ndarray
    minus: np.ndarray
    ctx: MomentumContext

    def get(self, sign: int) -> np.ndarray:
        return self.plus if sign > 0 else self.minus


def energy_projectors(ctx: MomentumContext) -> EnergyProjectors:
    H = dirac_hamiltonian(ctx)
    one = identity(4)
    return EnergyProjectors((one + H / ctx.p0) / 2, (one - H / ctx.p0) / 2, ctx)


@dataclass(frozen=True)
class PositionMatrixPart:
    M: tuple
    ctx: MomentumContext


def proper_position_matrix_part(ctx: MomentumContext) -> PositionMatrixPart:
    """M^k = (Sigma x p)^k / (2m(p0+m)) - i g5 Sigma^k/(2m) + i g5 (Sigma.p) p^k / (2m p0 (p0+m))."""
    b = dirac_basis()
    m, p, p0 = ctx.m, ctx.p, ctx.p0
    Sp = sum(b.Sigma[k] * p[k] for k in range(3))
    M = []
    for k in range(3):
        cross = sum(EPS3[k, i, j] * b.Sigma[i] * p[j] for i in range(3) for j in range(3))
        M.append(
            cross / (2 * m * (p0 + m))
            - 1j * b.gamma5 @ b.Sigma[k] / (2 * m)
            + 1j * p[k] * b.gamma5 @ Sp / (2 * m * p0 * (p0 + m))
        )
    return PositionMatrixPart(tuple(M), ctx)


def _richardson(f, ctx: MomentumContext, k: int, h: float) -> np.ndarray:
    """d f / d p^k by central differences at h and h/2, Richardson-combined."""
    e = np.zeros(3)
    e[k] = 1.0

    def central(step):
        return (f(ctx.with_momentum(ctx.p + step * e)) - f(ctx.with_momentum(ctx.p - step * e))) / (2 * step)

    return (4 * central(h / 2) - central(h)) / 3


def _boost_inverse(ctx):
    b = dirac_basis()
    return mat_exp(-sum(b.alpha[k] * ctx.xi[k] for k in range(3)) / 2)


def boost_relation_residual(ctx: MomentumContext, h: float | None = None) -> float:
    """max_k |M^k - i U dU^-1/dp^k| with U = exp(g5 Sigma.xi / 2) = exp(alpha.xi / 2)."""
    h = FD_STEP * ctx.m if h is None else h
    b = dirac_basis()
    U = mat_exp(sum(b.alpha[k] * ctx.xi[k] for k in range(3)) / 2)
    M = proper_position_matrix_part(ctx).M
    return max(norm_inf(M[k] - 1j * U @ _richardson(_boost_inverse, ctx, k, h)) for k in range(3))


def locality_residual(ctx: MomentumContext, h: float | None = None) -> float:
    """max_{i<j} |i dM^j/dp^i - i dM^i/dp^j + [M^i, M^j]|."""
    h = FD_STEP * ctx.m if h is None else h
    M = proper_position_matrix_part(ctx).M
    dM = [
        [_richardson(lambda c, j=j: proper_position_matrix_part(c).M[j], ctx, i, h) for j in range(3)]
        for i in range(3)
    ]
    worst = 0.0
    for i in range(3):
        for j in range(i + 1, 3):
            worst = max(worst, norm_inf(1j * dM[i][j] - 1j * dM[j][i] + commutator(M[i], M[j])))
    return worst


def total_angular_momentum_residual(ctx: MomentumContext, sign: int = 1) -> float:
    """max_k |Sigma^k/2 - S^k(p) - sign * eps_{kij} M^i p^j|."""
    b = dirac_basis()
    S = direct_sum_spin(ctx)
    M = proper_position_matrix_part(ctx).M
    out = 0.0
    for k in range(3):
        orb = sum(EPS3[k, i, j] * M[i] * ctx.p[j] for i in range(3) for j in range(3))
        out = max(out, norm_inf(b.Sigma[k] / 2 - S[k] - sign * orb))
    return out


TAM_SIGN = 1  # pinned: the opposite ordering of the cross product fails


def total_angular_momentum_check(ctx: MomentumContext, tol: float = 1e-10):
    r = total_angular_momentum_residual(ctx, TAM_SIGN)
    return check(
        "dynamics.total_angular_momentum",
        "Sigma/2 + X x P = S(p) + (X + M(p)) x P, matrix part",
        r,
        tol * max(1.0, ctx.pmag / ctx.m),
        momentum=ctx.p,
    )


def hamiltonian_total_j_residual(ctx: MomentumContext) -> float:
    """[H, Sigma^k/2] + [H, (X x P)^k] = 0, using [H, X^i] = -i alpha^i."""
    b = dirac_basis()
    H = dirac_hamiltonian(ctx)
    out = 0.0
    for k in range(3):
        orb = sum(EPS3[k, i, j] * b.alpha[i] * ctx.p[j] for i in range(3) for j in range(3))
        out = max(out, norm_inf(commutator(H, b.Sigma[k]) / 2 - 1j * orb))
    return out


def _check_mode(mode):
    if mode not in ("oracle", "closed_form"):
        raise ValueError(f"mode must be 'oracle' or 'closed_form', got {mode!r}")


def velocity_operator(ctx: MomentumContext, mode: str = "oracle") -> tuple:
    """v^k = i[H, X^k + M^k].

    oracle: alpha^k + i[H, M^k]. closed_form: the long-hand expression
    (p0/m) alpha - (gamma.p) p / (p0 (p0+m)) + i Sigma x p / m + gamma
    - (alpha.p) p / (m (p0+m)), evaluated as written.
    """
    _check_mode(mode)
    b = dirac_basis()
    m, p, p0 = ctx.m, ctx.p, ctx.p0
    if mode == "oracle":
        H = dirac_hamiltonian(ctx)
        M = proper_position_matrix_part(ctx).M
        return tuple(b.alpha[k] + 1j * commutator(H, M[k]) for k in range(3))
    gp = sum(b.gamma[i + 1] * p[i] for i in range(3))
    ap = sum(b.alpha[i] * p[i] for i in range(3))
    out = []
    for k in range(3):
        cross = sum(EPS3[k, i, j] * b.Sigma[i] * p[j] for i in range(3) for j in range(3))
        out.append(
            p0 / m * b.alpha[k]
            - gp * p[k] / (p0 * (p0 + m))
            + 1j * cross / m
            + b.gamma[k + 1]
            - ap * p[k] / (m * (p0 + m))
        )
    return tuple(out)


def _cross(a, b):
    # (a x b)^k for sequences of scalars or matrices
    return [sum(EPS3[k, i, j] * a[i] * b[j] for i in range(3) for j in range(3)) for k in range(3)]


def acceleration_operator(ctx: MomentumContext, mode: str = "oracle") -> tuple:
    """a^k = i[H, v^k].

    oracle: commutator with the oracle velocity. closed_form: the long-hand
    expression (2p0/m) p x Sigma + 2i[(p x gamma) x p/(p0+m) - m beta p/p0
    - m (alpha.p) p/(p0(p0+m)) + (p x alpha) x p/m + m(beta + I) gamma].
    """
    _check_mode(mode)
    if mode == "oracle":
        H = dirac_hamiltonian(ctx)
        return tuple(1j * commutator(H, v) for v in velocity_operator(ctx, "oracle"))
    b = dirac_basis()
    m, p, p0 = ctx.m, ctx.p, ctx.p0
    gam = [b.gamma[i + 1] for i in range(3)]
    ap = sum(b.alpha[i] * p[i] for i in range(3))
    pxS = _cross(p, b.Sigma)
    pxgxp = _cross(_cross(p, gam), p)
    pxaxp = _cross(_cross(p, b.alpha), p)
    one = identity(4)
    return tuple(
        2 * p0 / m * pxS[k]
        + 2j
        * (
            pxgxp[k] / (p0 + m)
            - m * b.beta * p[k] / p0
            - m * ap * p[k] / (p0 * (p0 + m))
            + pxaxp[k] / m
            + m * (b.beta + one) @ gam[k]
        )
        for k in range(3)
    )


def closed_form_deviation(ctx: MomentumContext, which: str) -> float:
    f = velocity_operator if which == "velocity" else acceleration_operator
    a, b = f(ctx, "oracle"), f(ctx, "closed_form")
    return max(norm_inf(x - y) for x, y in zip(a, b))


def velocity_spectrum_residual(ctx: MomentumContext) -> float:
    """Characteristic-polynomial distance of each v^k from {+-p^k/p0 (x2)}."""
    v = velocity_operator(ctx, "oracle")
    out = 0.0
    for k in range(3):
        x = ctx.p[k] / ctx.p0
        out = max(out, spectrum_deviation(v[k], [x, x, -x, -x]))
    return out


def acceleration_spectrum_residual(ctx: MomentumContext) -> float:
    return max(spectrum_deviation(a, [0, 0, 0, 0]) for a in acceleration_operator(ctx, "oracle"))


def cross_energy_blocks(ctx: MomentumContext, ops) -> dict:
    """{'-+': max_k |L- O^k L+|, '+-': max_k |L+ O^k L-|}."""
    P = energy_projectors(ctx)
    return {
        "-+": max(norm_inf(P.minus @ o @ P.plus) for o in ops),
        "+-": max(norm_inf(P.plus @ o @ P.minus) for o in ops),
    }


def solution_basis(ctx: MomentumContext) -> np.ndarray:
    """Columns u(+1/2), u(-1/2), v(+1/2), v(-1/2), each unit-normalised."""
    u, v = dirac_spinors(ctx)
    cols = [u[0.5], u[-0.5], v[0.5], v[-0.5]]
    return np.column_stack([c / np.linalg.norm(c) for c in cols])


def solution_matrix_elements(ctx: MomentumContext, ops) -> float:
    """max_k max_{a,b} |w_a^dag O^k w_b| over the unit-normalised u and v spinors."""
    W = solution_basis(ctx)
    return max(np.max(np.abs(W.conj().T @ o @ W)) for o in ops)


@dataclass(frozen=True)
class ZitterbewegungTrace:
    t: np.ndarray
    alpha: np.ndarray  # (n, 3) real parts of <alpha^k>
    velocity: np.ndarray  # (n, 3) real parts of <v^k>
    alpha_constant: tuple
    velocity_constant: tuple
    alpha_eigenvalues: np.ndarray
    tol: float

    def rows(self):
        for i, t in enumerate(self.t):
            yield (t, *self.alpha[i], *self.velocity[i])


def zitterbewegung_comparison(ctx: MomentumContext, mix=(1.0, 0.0), *, lam=0.5, n=64, tol=1e-10):
    """Expectation traces of alpha^k and the oracle v^k in psi(t) = a u e^{-ip0 t} + b v e^{ip0 t}.

    u and v are unit-normalised; t spans two periods 2 pi / (2 p0). A column
    is flagged constant when its peak-to-peak spread is at most ``tol``.
    """
    a, b = (complex(x) for x in mix)
    norm = np.hypot(abs(a), abs(b))
    if not abs(norm - 1.0) <= 1e-12:
        raise ValueError(f"mix must be normalised, |mix| = {norm}")
    u, v = dirac_spinors(ctx)
    uu = u[lam] / np.linalg.norm(u[lam])
    vv = v[lam] / np.linalg.norm(v[lam])
    period = 2 * np.pi / (2 * ctx.p0)
    t = np.arange(n) * (2 * period / n)
    psi = np.outer(np.exp(-1j * ctx.p0 * t), a * uu) + np.outer(np.exp(1j * ctx.p0 * t), b * vv)
    alpha_ops = dirac_basis().alpha
    vel_ops = velocity_operator(ctx, "oracle")

    def expect(ops):
        return np.column_stack([np.real(np.einsum("ti,ij,tj->t", psi.conj(), o, psi)) for o in ops])

    A, V = expect(alpha_ops), expect(vel_ops)
    flat = lambda X: tuple(bool(np.ptp(X[:, k]) <= tol) for k in range(3))
    eigs = np.real(eig_small(alpha_ops[2]))
    return ZitterbewegungTrace(t, A, V, flat(A), flat(V), eigs, tol)
