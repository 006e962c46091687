"""Deterministic momentum samples: fixed edge cases first, then seeded random draws."""
from __future__ import annotations

import numpy as np

from .minkowski import MomentumContext, random_lorentz

FIXED_MOMENTA = (
    (0.0, 0.0, 0.0),
    (0.0, 0.0, 0.75),
    (0.75, 0.0, 0.0),
    (0.0, 0.75, 0.0),
    (0.0, 0.0, -2.0),
    (0.5, 0.0, 0.0),
)


def _unit(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def momentum_samples(n: int, m: float = 1.0, seed: int = 42, cap: float = 10.0) -> list:
    """``n`` contexts: the fixed cases (in units of m) then |p| log-uniform in [1e-3 m, cap m]."""
    if n < 1:
        raise ValueError("need at least one sample")
    out = [MomentumContext(m, np.array(p) * m) for p in FIXED_MOMENTA if np.linalg.norm(p) <= cap][:n]
    rng = np.random.default_rng(seed)
    lo, hi = np.log(1e-3 * m), np.log(cap * m)
    while len(out) < n:
        out.append(MomentumContext(m, np.exp(rng.uniform(lo, hi)) * _unit(rng)))
    return out


def at_least(samples, fraction: float = 0.5) -> list:
    """Samples with |p| >= fraction * m."""
    return [c for c in samples if c.pmag >= fraction * c.m]


def lorentz_pairs(n: int, m: float = 1.0, seed: int = 42, cap: float = 10.0, *, min_angle: float = 0.05) -> list:
    """``n`` (Lambda, ctx) pairs with Lambda p not collinear with p and both |p|, |Lambda p| <= cap m."""
    rng = np.random.default_rng(seed + 1)
    lo, hi = np.log(1e-2 * m), np.log(cap * m)
    out = []
    while len(out) < n:
        ctx = MomentumContext(m, np.exp(rng.uniform(lo, hi)) * _unit(rng))
        lam = random_lorentz(rng)
        q = (lam @ ctx.four_momentum)[1:]
        c = np.dot(q, ctx.p) / (np.linalg.norm(q) * ctx.pmag + 1e-300)
        if abs(c) < np.cos(min_angle) and np.linalg.norm(q) <= cap * m:
            out.append((lam, ctx))
    return out
