"""Coefficient conditions for the linear Pauli-Lubanski ansatz, and the boost form of S+.

The ansatz is S^k = a p^k w^0 + b p0 w^k + c eps_{kml} p^l w^m. Requiring the
su(2) algebra for every energy gives three polynomial identities in p0 whose
solutions are exactly (a, b, c) = (-1, 1, +/-i) / m^2.
"""
from __future__ import annotations

import numpy as np

from .minkowski import EPS3, MomentumContext
from .numkit import mat_exp, norm_inf
from .report import check
from .spin_reps import PAULI, SpinRep, make_spin_rep, pl_components, spin_operators, su2_residual


def coefficient_condition_residuals(a, b, c, m, p0):
    """(r1, r2, r3) of the three su(2) conditions at energy ``p0``."""
    if not m > 0:
        raise ValueError("mass must be positive")
    r1 = a + a * b * p0 ** 2 + b ** 2 * p0 ** 2 - m ** 2 * c ** 2
    r2 = b - a * b * (p0 ** 2 - m ** 2) - b ** 2 * p0 ** 2
    r3 = c - a * c * (p0 ** 2 - m ** 2) - b * c * p0 ** 2
    return r1, r2, r3


def solve_coefficient_conditions(m: float, *, check_energies=None):
    """All non-trivial (a, b, c) satisfying the conditions for every p0.

    Collecting powers of p0 in the three residuals gives
    a(a+b) = 0, a = m^2 c^2, b(a+b) = 0, b(1 + m^2 a) = 0, c(a+b) = 0,
    c(1 + m^2 a) = 0. Any zero coefficient forces all to vanish, leaving
    a = -b = -1/m^2 and c^2 = a/m^2. Each returned triple is re-verified
    against :func:`coefficient_condition_residuals` at ten energies.
    """
    if not m > 0:
        raise ValueError("only massive particles (m > 0) are supported")
    a = -1.0 / m ** 2
    b = -a
    c_sq = a / m ** 2
    roots = np.roots([1.0, 0.0, -c_sq])  # c^2 - c_sq = 0
    sols = []
    for c in sorted(roots, key=lambda z: -z.imag):
        c = complex(round(c.real, 15), c.imag)
        sols.append((complex(a), complex(b), c))
    energies = check_energies if check_energies is not None else m * np.linspace(1.0, 11.0, 10)
    for sol in sols:
        for p0 in energies:
            r = coefficient_condition_residuals(*sol, m, p0)
            scale = max(1.0, p0 ** 2 / m ** 4)
            if max(abs(x) for x in r) > 1e-12 * scale:
                raise ArithmeticError(f"solution {sol} fails conditions at p0={p0}: {r}")
    return sols


def ansatz_operators(ctx: MomentumContext, rep: SpinRep, a, b, c) -> tuple:
    pl = pl_components(ctx, rep)
    p, p0 = ctx.p, ctx.p0
    return tuple(
        a * p[k] * pl.w0
        + b * p0 * pl.w[k]
        + c * sum(EPS3[k, mm, ll] * p[ll] * pl.w[mm] for mm in range(3) for ll in range(3))
        for k in range(3)
    )


def ansatz_su2_residual(ctx: MomentumContext, rep: SpinRep, a, b, c) -> float:
    return su2_residual(ansatz_operators(ctx, rep, a, b, c))


def transformation_forms(ctx: MomentumContext):
    """Three spin-1/2 forms of S+^k(p): closed form, sinh/cosh expansion, conjugation."""
    rep = make_spin_rep(0.5)
    closed = spin_operators(ctx, rep).plus
    xi = ctx.rapidity
    if xi == 0.0:
        phat = np.zeros(3)
    else:
        phat = ctx.p / ctx.pmag
    sp = sum(PAULI[k] * phat[k] for k in range(3))
    A = [1j * sum(EPS3[k, i, j] * PAULI[i] * phat[j] for i in range(3) for j in range(3)) / 2 for k in range(3)]
    B = [PAULI[k] / 2 - phat[k] * sp / 2 for k in range(3)]
    expansion = tuple(PAULI[k] / 2 + np.sinh(xi) * A[k] + (np.cosh(xi) - 1) * B[k] for k in range(3))
    gen = sum(PAULI[k] * ctx.xi[k] for k in range(3)) / 2
    U, Uinv = mat_exp(gen), mat_exp(-gen)
    conj = tuple(U @ (PAULI[k] / 2) @ Uinv for k in range(3))
    return closed, expansion, conj


def transformation_identity_check(ctx: MomentumContext, tol: float = 1e-10):
    closed, expansion, conj = transformation_forms(ctx)
    r = max(
        max(norm_inf(closed[k] - expansion[k]), norm_inf(closed[k] - conj[k])) for k in range(3)
    )
    return check(
        "derivation.transformation_identity",
        "S+(p) = exp(sigma.xi/2) (sigma/2) exp(-sigma.xi/2) = sigma/2 + sinh(xi) A + (cosh(xi)-1) B",
        r,
        tol,
        momentum=ctx.p,
    )
