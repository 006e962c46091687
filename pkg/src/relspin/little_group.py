"""Little-group elements generated by S+ and S-, checked against Wigner rotations."""
from __future__ import annotations

import numpy as np

from .minkowski import MomentumContext, boosted_context, rotation_angle_axis, wigner_rotation
from .numkit import mat_exp, norm_inf
from .report import check, combine
from .spin_reps import SpinRep, boost_rep, lorentz_rep, rotation_rep, spin_eigenstates, spin_operators


def little_group_angle(lam, ctx: MomentumContext) -> np.ndarray:
    """Rotation vector phi = angle * axis of R(Lambda, p)."""
    axis, angle = rotation_angle_axis(wigner_rotation(lam, ctx))
    return angle * axis


def su2_angle(W) -> np.ndarray:
    """Rotation vector of a 2x2 matrix W = exp(-i phi.sigma/2), up to the SU(2) sign."""
    W = np.asarray(W)
    if np.real(np.trace(W)) < 0:
        W = -W
    c = np.real(np.trace(W)) / 2
    # W = cos(h) - i sin(h) n.sigma, so v = sin(h) n
    v = np.array([-np.imag(W[0, 1] + W[1, 0]) / 2, np.real(W[1, 0] - W[0, 1]) / 2, -np.imag(W[0, 0] - W[1, 1]) / 2])
    s = np.linalg.norm(v)
    if s < 1e-15:
        return np.zeros(3)
    half = np.arctan2(s, c)
    return 2 * half * v / s


def little_group_check(lam, ctx: MomentumContext, rep: SpinRep, tol: float = 1e-9):
    """Check the little-group statements for one (Lambda, p) pair and both handedness.

    Matrix residuals are divided by norm(U) norm(U^-1) of the boosts involved,
    since exp(+/- J.xi) grows like exp(s |xi|) and absolute rounding grows with it.

    Returns report entries for
      * conjugation: U[L(q)] exp(i phi.J) U[L(q)]^-1 = exp(i phi.S(q));
      * rest action: exp(i phi.S(q)) Psi(q, l) = U[L(q)] exp(i phi.J) Psi(k, l);
      * group law: U[L(q)]^-1 U[Lambda] U[L(p)] = exp(-i phi.J) for the
        independently built spin image of Lambda, with the same phi for +/-;
      * angle agreement: for s = 1/2 the rotation vector read off each
        handedness' spin-space matrix equals the 4x4 extraction.
    """
    q = boosted_context(lam, ctx)
    phi = little_group_angle(lam, ctx)
    Jphi = rep.dot(phi)
    ops = spin_operators(q, rep)
    conj_r, rest_r, law_r, angle_r = 0.0, 0.0, 0.0, 0.0
    W = {}
    for h in (1, -1):
        Uq = boost_rep(q, rep, h)
        Uq_inv = boost_rep(q, rep, -h)
        # residuals relative to the conditioning of the boost images
        scale = max(1.0, norm_inf(Uq) * norm_inf(Uq_inv))
        D = mat_exp(1j * ops.along(phi, h))
        conj_r = max(conj_r, norm_inf(Uq @ mat_exp(1j * Jphi) @ Uq_inv - D) / scale)
        psi_q = spin_eigenstates(q, rep, h)
        rest_r = max(rest_r, norm_inf(D @ psi_q - Uq @ mat_exp(1j * Jphi)) / scale)
        W[h] = Uq_inv @ lorentz_rep(lam, rep, h) @ boost_rep(ctx, rep, h)
        axis = phi / np.linalg.norm(phi) if np.linalg.norm(phi) > 0 else np.array([0.0, 0.0, 1.0])
        R = rotation_rep(axis, np.linalg.norm(phi), rep)
        dev = norm_inf(W[h] - R)
        if rep.dim % 2 == 0:
            # half-integer spin: the rotation is represented up to an overall sign
            dev = min(dev, norm_inf(W[h] + R))
        law_scale = max(1.0, scale * norm_inf(lorentz_rep(lam, rep, h)) * norm_inf(boost_rep(ctx, rep, h)))
        law_r = max(law_r, dev / law_scale)
    if rep.dim == 2:
        a_plus, a_minus = su2_angle(W[1]), su2_angle(W[-1])
        angle_r = max(np.max(np.abs(a_plus - a_minus)), np.max(np.abs(a_plus - phi)))
    else:
        angle_r = norm_inf(W[1] - W[-1]) / max(1.0, norm_inf(W[1]))
    tag = f"s={rep.s:g}"
    return [
        check(f"little_group.conjugation[{tag}]", "U(q) exp(i phi.J) U(q)^-1 = exp(i phi.S(q))", conj_r, tol, momentum=ctx.p),
        check(f"little_group.rest_action[{tag}]", "exp(i phi.S(q)) Psi(q) = U(q) exp(i phi.J) Psi(k)", rest_r, tol, momentum=ctx.p),
        check(f"little_group.group_law[{tag}]", "U(L(q))^-1 U(Lambda) U(L(p)) = D(R(Lambda, p))", law_r, tol, momentum=ctx.p),
        check(f"little_group.equal_angle[{tag}]", "same rotation angle for right- and left-handed states", angle_r, tol, momentum=ctx.p),
    ]


def merge_little_group(results_per_sample):
    by_name = {}
    for entries in results_per_sample:
        for e in entries:
            by_name.setdefault(e.name, []).append(e)
    return [combine(name, rs[0].anchor, rs) for name, rs in by_name.items()]
