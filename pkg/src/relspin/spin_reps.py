"""Spin-s generators, Pauli-Lubanski components and the two spin operators S+ and S-.

Handedness is passed as +1 (right-handed, U+ = exp(+J.xi)) or -1
(left-handed, U- = exp(-J.xi)).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .minkowski import EPS3, MomentumContext, rotation_angle_axis, standard_boost
from .numkit import commutator, identity, mat_exp, norm_inf

MAX_SPIN = 3.0

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


@dataclass(frozen=True)
class SpinRep:
    s: float
    J: tuple  # (J1, J2, J3), each (2s+1) x (2s+1)

    @property
    def dim(self) -> int:
        return int(round(2 * self.s)) + 1

    @property
    def weights(self) -> np.ndarray:
        """J3 eigenvalues s, s-1, ..., -s in basis order."""
        return self.s - np.arange(self.dim)

    def dot(self, v) -> np.ndarray:
        return sum(self.J[k] * v[k] for k in range(3))


def _check_handedness(h):
    if h not in (1, -1):
        raise ValueError(f"handedness must be +1 or -1, got {h!r}")


def parse_spin(s) -> float:
    """Accept 0.5, '1/2', Fraction(3, 2), ...; reject anything but half-integers."""
    try:
        f = Fraction(s) if not isinstance(s, float) else Fraction(s).limit_denominator(1000)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a spin value: {s!r}") from exc
    if (2 * f).denominator != 1 or f < 0:
        raise ValueError(f"spin must be a non-negative half-integer, got {s!r}")
    return float(f)


@lru_cache(maxsize=None)
def make_spin_rep(s) -> SpinRep:
    s = parse_spin(s)
    if s > MAX_SPIN:
        raise ValueError(f"spin above cap {MAX_SPIN}: {s}")
    dim = int(round(2 * s)) + 1
    mz = s - np.arange(dim)
    jp = np.zeros((dim, dim), dtype=np.complex128)
    for i in range(1, dim):
        # <m+1|J+|m> = sqrt(s(s+1) - m(m+1)), basis ordered m = s..-s
        jp[i - 1, i] = np.sqrt(s * (s + 1) - mz[i] * (mz[i] + 1))
    jm = jp.conj().T
    J1 = (jp + jm) / 2
    J2 = (jp - jm) / 2j
    J3 = np.diag(mz).astype(np.complex128)
    for a in (J1, J2, J3):
        a.setflags(write=False)
    return SpinRep(s, (J1, J2, J3))


@dataclass(frozen=True)
class PLSet:
    """Pauli-Lubanski components w^mu as matrices on the spin space."""

    w0: np.ndarray
    w: tuple
    ctx: MomentumContext

    def transversality_residual(self) -> float:
        p0, p = self.ctx.p0, self.ctx.p
        return norm_inf(p0 * self.w0 - sum(p[k] * self.w[k] for k in range(3)))


def pl_components(ctx: MomentumContext, rep: SpinRep) -> PLSet:
    """w^0 = J.p, w^i = m J^i + p^i (J.p) / (m + p0)."""
    Jp = rep.dot(ctx.p)
    w = tuple(ctx.m * rep.J[i] + ctx.p[i] * Jp / (ctx.m + ctx.p0) for i in range(3))
    return PLSet(Jp, w, ctx)


def pl_components_by_boost(ctx: MomentumContext, rep: SpinRep) -> PLSet:
    """Same components obtained as L(p) applied to the rest vector (0, m J)."""
    L = standard_boost(ctx)
    rest = [np.zeros((rep.dim, rep.dim), dtype=np.complex128)] + [ctx.m * j for j in rep.J]
    comps = [sum(L[mu, nu] * rest[nu] for nu in range(4)) for mu in range(4)]
    return PLSet(comps[0], tuple(comps[1:]), ctx)


@dataclass(frozen=True)
class SpinOperatorPair:
    plus: tuple
    minus: tuple
    ctx: MomentumContext
    rep: SpinRep

    def get(self, handedness) -> tuple:
        _check_handedness(handedness)
        return self.plus if handedness == 1 else self.minus

    def along(self, n, handedness) -> np.ndarray:
        S = self.get(handedness)
        return sum(S[k] * n[k] for k in range(3))


def _cross_J_p(rep: SpinRep, p) -> list:
    # (J x p)^k = eps_{kij} J^i p^j
    return [sum(EPS3[k, i, j] * rep.J[i] * p[j] for i in range(3) for j in range(3)) for k in range(3)]


def spin_operators(ctx: MomentumContext, rep: SpinRep) -> SpinOperatorPair:
    """Closed form S^k(p) = (p0/m) J^k - p^k (J.p)/(m(p0+m)) +/- i (J x p)^k / m."""
    m, p, p0 = ctx.m, ctx.p, ctx.p0
    Jp = rep.dot(p)
    cross = _cross_J_p(rep, p)
    common = [p0 / m * rep.J[k] - p[k] * Jp / (m * (p0 + m)) for k in range(3)]
    plus = tuple(common[k] + 1j * cross[k] / m for k in range(3))
    minus = tuple(common[k] - 1j * cross[k] / m for k in range(3))
    return SpinOperatorPair(plus, minus, ctx, rep)


def spin_operators_from_pl(ctx: MomentumContext, rep: SpinRep) -> SpinOperatorPair:
    """S^k = (p0 w^k - p^k w^0)/m^2 +/- (i/m^2) eps_{kml} p^l w^m, built from :func:`pl_components`."""
    m, p, p0 = ctx.m, ctx.p, ctx.p0
    pl = pl_components(ctx, rep)
    base = [(p0 * pl.w[k] - p[k] * pl.w0) / m ** 2 for k in range(3)]
    eps_term = [
        sum(EPS3[k, a, b] * p[b] * pl.w[a] for a in range(3) for b in range(3)) for k in range(3)
    ]
    plus = tuple(base[k] + 1j * eps_term[k] / m ** 2 for k in range(3))
    minus = tuple(base[k] - 1j * eps_term[k] / m ** 2 for k in range(3))
    return SpinOperatorPair(plus, minus, ctx, rep)


def boost_rep(ctx: MomentumContext, rep: SpinRep, handedness: int) -> np.ndarray:
    """U+/-[L(p)] = exp(+/- J.xi)."""
    _check_handedness(handedness)
    return mat_exp(handedness * rep.dot(ctx.xi))


def rotation_rep(axis, angle: float, rep: SpinRep) -> np.ndarray:
    """exp(-i angle n.J): the same for both handedness."""
    n = np.asarray(axis, dtype=float)
    return mat_exp(-1j * angle * rep.dot(n / np.linalg.norm(n)))


def lorentz_rep(lam, rep: SpinRep, handedness: int) -> np.ndarray:
    """Spin-space image of a proper orthochronous Lorentz matrix.

    Lambda is split as L(Lambda k) R with R = L(Lambda k)^-1 Lambda a rotation,
    so U[Lambda] = U[L(Lambda k)] exp(-i phi n.J).
    """
    from .minkowski import wigner_rotation

    rest = MomentumContext(1.0, np.zeros(3))
    R = wigner_rotation(lam, rest)
    axis, angle = rotation_angle_axis(R)
    q = MomentumContext(1.0, (np.asarray(lam) @ rest.four_momentum)[1:])
    return boost_rep(q, rep, handedness) @ rotation_rep(axis, angle, rep)


def rest_basis(rep: SpinRep, axis=None) -> np.ndarray:
    """Columns are J.n eigenvectors with eigenvalues s, s-1, ..., -s (n = z by default)."""
    if axis is None:
        return identity(rep.dim)
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    z = np.array([0.0, 0.0, 1.0])
    c = np.clip(n @ z, -1.0, 1.0)
    if 1 - c < 1e-15:
        return identity(rep.dim)
    if 1 + c < 1e-15:
        return rotation_rep([1.0, 0.0, 0.0], np.pi, rep)
    k = np.cross(z, n)
    return rotation_rep(k, float(np.arccos(c)), rep)


def spin_eigenstates(ctx: MomentumContext, rep: SpinRep, handedness: int, axis=None) -> np.ndarray:
    """Columns Psi(p, lambda) = U[L(p)] Psi(k, lambda) for lambda = s, ..., -s."""
    return boost_rep(ctx, rep, handedness) @ rest_basis(rep, axis)


def su2_residual(ops) -> float:
    """max over (i, j) of |[S^i, S^j] - i eps_{ijk} S^k|."""
    worst = 0.0
    for i in range(3):
        for j in range(3):
            rhs = sum(1j * EPS3[i, j, k] * ops[k] for k in range(3))
            worst = max(worst, norm_inf(commutator(ops[i], ops[j]) - rhs))
    return worst


def casimir_residual(ops, s: float) -> float:
    n = ops[0].shape[0]
    return norm_inf(sum(o @ o for o in ops) - s * (s + 1) * identity(n))
