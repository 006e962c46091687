"""Four-vectors, metric and Levi-Civita conventions, boosts and Wigner rotations.

Conventions: natural units, metric diag(+1, -1, -1, -1), and the mixed
Levi-Civita normalisation eps_{0123} = eps^{1230} = +1 (so eps^{0123} = -1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


class NotARotationError(ValueError):
    pass


def minkowski_dot(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]


def lower(a) -> np.ndarray:
    return METRIC @ np.asarray(a, dtype=float)


def _perm_sign(idx) -> int:
    idx = list(idx)
    if len(set(idx)) < len(idx):
        return 0
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def levi_civita(mu, nu, rho, sigma, *, upper: bool = False) -> int:
    """Four-index Levi-Civita symbol with eps_{0123} = +1 (lower indices).

    With ``upper=True`` all four indices are raised with the metric, which
    gives eps^{0123} = -1 and eps^{1230} = +1.
    """
    idx = (mu, nu, rho, sigma)
    if any(i not in (0, 1, 2, 3) for i in idx):
        raise IndexError(f"Levi-Civita indices must be in 0..3, got {idx}")
    sign = _perm_sign(idx)
    if upper:
        sign *= int(np.prod([METRIC[i, i] for i in idx]))
    return sign


def levi_civita3(i, j, k) -> int:
    """Three-index symbol on spatial labels 1..3 with eps_{123} = +1."""
    if any(x not in (1, 2, 3) for x in (i, j, k)):
        raise IndexError(f"spatial Levi-Civita indices must be in 1..3, got {(i, j, k)}")
    return _perm_sign((i, j, k))


def _check_levi_civita_conventions():
    assert levi_civita(0, 1, 2, 3) == 1
    assert levi_civita(1, 2, 3, 0, upper=True) == 1
    assert levi_civita(0, 1, 2, 3, upper=True) == -1
    # eps_{0kml} restricted to spatial indices is eps_{kml}
    for k, m, l in permutations((1, 2, 3)):
        assert levi_civita(0, k, m, l) == levi_civita3(k, m, l)


_check_levi_civita_conventions()

EPS3 = np.zeros((3, 3, 3))
for _i, _j, _k in permutations(range(3)):
    EPS3[_i, _j, _k] = _perm_sign((_i, _j, _k))


@dataclass(frozen=True)
class MomentumContext:
    """Mass and spatial momentum of an on-shell particle.

    Energy and rapidity are always derived, never stored independently.
    """

    m: float
    p: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")
        p = np.array(self.p, dtype=float).reshape(3)
        if not np.all(np.isfinite(p)):
            raise ValueError("momentum must be finite")
        object.__setattr__(self, "p", p)

    @property
    def p0(self) -> float:
        return float(np.sqrt(self.m ** 2 + self.p @ self.p))

    @property
    def pmag(self) -> float:
        return float(np.linalg.norm(self.p))

    @property
    def four_momentum(self) -> np.ndarray:
        return np.concatenate([[self.p0], self.p])

    @property
    def xi(self) -> np.ndarray:
        """Rapidity vector 2 p_hat artanh(|p| / (p0 + m)); exactly zero at rest."""
        n = self.pmag
        if n == 0.0:
            return np.zeros(3)
        return 2.0 * self.p / n * np.arctanh(n / (self.p0 + self.m))

    @property
    def rapidity(self) -> float:
        return float(np.linalg.norm(self.xi))

    def with_momentum(self, p) -> "MomentumContext":
        return MomentumContext(self.m, p)


def standard_boost(ctx: MomentumContext) -> np.ndarray:
    """Pure boost L(p) taking (m, 0, 0, 0) to (p0, p)."""
    m, p, p0 = ctx.m, ctx.p, ctx.p0
    L = np.empty((4, 4))
    L[0, 0] = p0 / m
    L[0, 1:] = p / m
    L[1:, 0] = p / m
    L[1:, 1:] = np.eye(3) + np.outer(p, p) / (m * (p0 + m))
    return L


def boost_along(rapidity: float, direction) -> np.ndarray:
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n)
    return standard_boost(MomentumContext(1.0, np.sinh(rapidity) * n))


def rotation_matrix(axis, angle: float) -> np.ndarray:
    """4x4 Lorentz matrix of an active rotation (Rodrigues) about ``axis``."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    K = np.array([[0, -n[2], n[1]], [n[2], 0, -n[0]], [-n[1], n[0], 0]])
    R3 = np.eye(3) + np.sin(angle) * K + (1 - np.cos(angle)) * K @ K
    R = np.eye(4)
    R[1:, 1:] = R3
    return R


def is_lorentz(L, tol: float = 1e-10) -> bool:
    L = np.asarray(L)
    return (
        np.max(np.abs(L.T @ METRIC @ L - METRIC)) <= tol * max(1.0, np.max(np.abs(L)) ** 2)
        and abs(np.linalg.det(L) - 1.0) <= tol * max(1.0, np.max(np.abs(L)) ** 4)
        and L[0, 0] >= 1.0 - tol
    )


def boosted_context(lam, ctx: MomentumContext) -> MomentumContext:
    """Context of momentum Lambda p; the energy is re-derived on shell."""
    q = np.asarray(lam) @ ctx.four_momentum
    return ctx.with_momentum(q[1:])


def wigner_rotation(lam, ctx: MomentumContext) -> np.ndarray:
    """R(Lambda, p) = L(Lambda p)^-1 Lambda L(p)."""
    lam = np.asarray(lam, dtype=float)
    q = boosted_context(lam, ctx)
    Lq = standard_boost(q)
    # inverse of a pure boost is G L^T G
    Lq_inv = METRIC @ Lq.T @ METRIC
    return Lq_inv @ lam @ standard_boost(ctx)


def rotation_angle_axis(R, tol: float = 1e-8):
    """Axis (unit 3-vector) and angle in [0, pi] of a rotation in Lorentz form.

    The zero rotation returns the fixed axis z.
    """
    R = np.asarray(R, dtype=float)
    if R.shape == (4, 4):
        if abs(R[0, 0] - 1) > tol or np.max(np.abs(R[0, 1:])) > tol or np.max(np.abs(R[1:, 0])) > tol:
            raise NotARotationError("matrix does not fix the time axis")
        R3 = R[1:, 1:]
    elif R.shape == (3, 3):
        R3 = R
    else:
        raise NotARotationError(f"bad shape {R.shape}")
    if np.max(np.abs(R3.T @ R3 - np.eye(3))) > tol or np.linalg.det(R3) < 0:
        raise NotARotationError("spatial block is not a proper rotation")
    c = np.clip((np.trace(R3) - 1) / 2, -1.0, 1.0)
    angle = float(np.arccos(c))
    if angle < 1e-12:
        return np.array([0.0, 0.0, 1.0]), 0.0
    if np.pi - angle > 1e-6:
        v = np.array([R3[2, 1] - R3[1, 2], R3[0, 2] - R3[2, 0], R3[1, 0] - R3[0, 1]])
        axis = v / (2 * np.sin(angle))
    else:
        # near pi the antisymmetric part vanishes; use R + I = 2 n n^T
        B = (R3 + np.eye(3)) / 2
        i = int(np.argmax(np.diag(B)))
        axis = B[:, i] / np.sqrt(B[i, i])
    axis = axis / np.linalg.norm(axis)
    return axis, angle


def random_lorentz(rng: np.random.Generator, max_rapidity: float = 2.0) -> np.ndarray:
    """Boost x rotation x boost with independent random directions."""

    def unit():
        v = rng.normal(size=3)
        return v / np.linalg.norm(v)

    b1 = boost_along(rng.uniform(0, max_rapidity), unit())
    r = rotation_matrix(unit(), rng.uniform(0, np.pi))
    b2 = boost_along(rng.uniform(0, max_rapidity), unit())
    return b1 @ r @ b2
