"""Plane-wave Noether bilinears: spin tensor, energy-momentum table, spin-current conditions."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import DiracContext, LAMBDAS, bar, dirac_basis
from .dynamics import dirac_hamiltonian, proper_position_matrix_part
from .minkowski import EPS3, METRIC
from .numkit import commutator, norm_inf
from .report import LOWER, check

FORMS = ("conjugated", "commutator")


def spin_tensor(dctx: DiracContext, form: str = "conjugated") -> np.ndarray:
    """S^{rho sigma}(p) as a (4, 4, 4, 4) array indexed [rho, sigma].

    conjugated: U[L(p)] Sigma^{rho sigma} U[L(p)]^-1 with the rest value
    Sigma^{rho sigma} = (i/4)[gamma^rho, gamma^sigma].
    commutator: (i/4)[gamma-tilde^rho(p), gamma-tilde^sigma(p)].
    """
    if form == "conjugated":
        U = dctx.U
        Uinv = np.linalg.inv(U)
        rest = dirac_basis().sigma_tensor
        return np.einsum("ab,rsbc,cd->rsad", U, rest, Uinv)
    if form == "commutator":
        g = dctx.gamma_tilde
        out = np.empty((4, 4, 4, 4), dtype=np.complex128)
        for r in range(4):
            for s in range(4):
                out[r, s] = 0.25j * commutator(g[r], g[s])
        return out
    raise ValueError(f"unknown spin tensor form {form!r}; expected one of {FORMS}")


def spatial_dual(St: np.ndarray) -> tuple:
    """(1/2) eps_{kij} S^{ij} for k = 1..3."""
    return tuple(
        sum(EPS3[k, i, j] * St[i + 1, j + 1] for i in range(3) for j in range(3)) / 2 for k in range(3)
    )


def dual_residual(dctx: DiracContext, form: str = "conjugated") -> float:
    return max(norm_inf(a - b) for a, b in zip(spatial_dual(spin_tensor(dctx, form)), dctx.spin))


def slash_p(dctx: DiracContext) -> np.ndarray:
    return dirac_basis().slash(dctx.ctx.four_momentum)


@dataclass(frozen=True)
class CurrentBilinears:
    T: np.ndarray  # [lam, lam', mu, nu] -> ubar(lam) gamma^mu u(lam') p^nu
    spin: np.ndarray
    dctx: DiracContext


def energy_momentum(dctx: DiracContext, form: str = "conjugated") -> CurrentBilinears:
    g = dirac_basis().gamma
    u = [dctx.u[l] for l in LAMBDAS]
    T = np.empty((2, 2, 4, 4), dtype=np.complex128)
    for a in range(2):
        for b in range(2):
            for mu in range(4):
                T[a, b, mu] = (bar(u[a]) @ g[mu] @ u[b]) * dctx.ctx.four_momentum
    return CurrentBilinears(T, spin_tensor(dctx, form), dctx)


def gordon_residual(dctx: DiracContext) -> float:
    """|ubar(l) gamma^mu u(l') - 2 p^mu / m delta_{l l'}| over all entries."""
    g = dirac_basis().gamma
    k = dctx.ctx.four_momentum
    out = 0.0
    for a, la in enumerate(LAMBDAS):
        for b, lb in enumerate(LAMBDAS):
            for mu in range(4):
                want = 2 * k[mu] / dctx.ctx.m if a == b else 0.0
                out = max(out, abs(bar(dctx.u[la]) @ g[mu] @ dctx.u[lb] - want))
    return out


def conservation_elements(dctx: DiracContext, form: str = "conjugated", *, right="u") -> dict:
    """max |ubar(l) [S^{rho sigma}, gamma.p] w(l')| split into rotation (ij) and boost (0i) sectors.

    ``right`` picks the ket spinors: "u" (positive energy) or "v".
    """
    St = spin_tensor(dctx, form)
    gp = slash_p(dctx)
    kets = dctx.u if right == "u" else dctx.v
    rot, boost = 0.0, 0.0
    for i in range(1, 4):
        for j in range(i + 1, 4):
            C = commutator(St[i, j], gp)
            rot = max(rot, max(abs(bar(dctx.u[a]) @ C @ kets[b]) for a in LAMBDAS for b in LAMBDAS))
        C = commutator(St[0, i], gp)
        boost = max(boost, max(abs(bar(dctx.u[a]) @ C @ kets[b]) for a in LAMBDAS for b in LAMBDAS))
    return {"rotation": rot, "boost": boost}


def spin_current_conservation_check(dctx: DiracContext, form: str = "conjugated", *, rot_tol=1e-9, boost_floor=1e-3):
    """Rotation-sector bilinears vanish; boost-sector bilinears are expected to stay away from zero."""
    el = conservation_elements(dctx, form)
    p = dctx.ctx.p
    return [
        check(
            "noether.spin_current.rotation",
            "ubar [S^{ij}(p), gamma.p] u = 0",
            el["rotation"],
            rot_tol,
            momentum=p,
        ),
        check(
            "noether.spin_current.boost_violation",
            "max_i |ubar [S^{0i}(p), gamma.p] u| > floor",
            el["boost"],
            boost_floor,
            momentum=p,
            bound=LOWER,
        ),
    ]


def canonical_vs_decomposed_residual(dctx: DiracContext, form: str = "conjugated", order: str = "gamma_first") -> float:
    """max over mu, (ij), l, l' of the difference of the two angular-momentum integrands.

    ubar gamma^mu [M^i p^j - M^j p^i + S^{ij}(p) - Sigma^{ij}] u, with the
    momentum-space position part acting on the spinor before gamma^mu
    (``order="gamma_first"``). ``order="position_first"`` evaluates
    ubar [M^i gamma^mu p^j - M^j gamma^mu p^i + gamma^mu (S^{ij} - Sigma^{ij})] u instead.
    """
    if order not in ("gamma_first", "position_first"):
        raise ValueError(f"unknown operand order {order!r}")
    g = dirac_basis().gamma
    rest = dirac_basis().sigma_tensor
    St = spin_tensor(dctx, form)
    M = proper_position_matrix_part(dctx.ctx).M
    p = dctx.ctx.p
    out = 0.0
    for mu in range(4):
        for i in range(3):
            for j in range(i + 1, 3):
                spin_part = g[mu] @ (St[i + 1, j + 1] - rest[i + 1, j + 1])
                if order == "gamma_first":
                    orb = g[mu] @ (M[i] * p[j] - M[j] * p[i])
                else:
                    orb = M[i] @ g[mu] * p[j] - M[j] @ g[mu] * p[i]
                X = orb + spin_part
                for a in LAMBDAS:
                    for b in LAMBDAS:
                        out = max(out, abs(bar(dctx.u[a]) @ X @ dctx.u[b]))
    return out


def canonical_vs_decomposed_check(dctx: DiracContext, tol: float = 1e-9):
    return check(
        "noether.canonical_vs_decomposed",
        "canonical current = orbital current + spin current (plane-wave integrands)",
        canonical_vs_decomposed_residual(dctx),
        tol,
        momentum=dctx.ctx.p,
    )


@dataclass(frozen=True)
class ChargeTable:
    density_ratio: dict  # lam -> u^dag S^{12} u / u^dag u
    offdiagonal: float  # |u^dag(+) S^{12} u(-)|
    time_derivative: float  # max |u^dag i[H, S^{ij}] u'|
    orbital_note: str


ORBITAL_NOTE = (
    "orbital charge Q_L^{ij} carries X^i p^j - X^j p^i and has no single-momentum "
    "density; only its conservation through the canonical-vs-decomposed identity is checked"
)


def conserved_charges(dctx: DiracContext, form: str = "conjugated") -> ChargeTable:
    St = spin_tensor(dctx, form)
    H = dirac_hamiltonian(dctx.ctx)
    u = dctx.u
    ratio = {l: float(np.real(u[l].conj() @ St[1, 2] @ u[l] / (u[l].conj() @ u[l]))) for l in LAMBDAS}
    off = abs(u[0.5].conj() @ St[1, 2] @ u[-0.5])
    dt = 0.0
    for i in range(1, 4):
        for j in range(i + 1, 4):
            C = 1j * commutator(H, St[i, j])
            dt = max(dt, max(abs(u[a].conj() @ C @ u[b]) for a in LAMBDAS for b in LAMBDAS))
    return ChargeTable(ratio, float(off), float(dt), ORBITAL_NOTE)


def antisymmetry_residual(St: np.ndarray) -> float:
    return float(np.max(np.abs(St + St.transpose(1, 0, 2, 3))))
