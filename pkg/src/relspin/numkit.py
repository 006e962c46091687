"""Small dense complex matrix kit.

Operators are plain ``numpy.ndarray`` objects of dtype ``complex128`` and
shape ``(n, n)``; :func:`operator` is the validating constructor.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

MAX_EIG_DIM = 6


class DimensionError(ValueError):
    pass


class EigenError(ArithmeticError):
    """Eigenvalue computation did not converge or failed its residual check."""


@dataclass(frozen=True)
class Tolerance:
    atol: float = 1e-10
    rtol: float = 1e-10

    def __post_init__(self):
        if self.atol < 0 or self.rtol < 0:
            raise ValueError("tolerances must be non-negative")

    def bound(self, scale: float = 0.0) -> float:
        return self.atol + self.rtol * max(1.0, scale)

    def passes(self, residual: float, scale: float = 0.0) -> bool:
        return residual <= self.bound(scale)


DEFAULT_TOL = Tolerance()


def operator(entries) -> np.ndarray:
    a = np.array(entries, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionError(f"operator must be a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("operator entries must be finite")
    return a


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def norm_inf(a) -> float:
    """Largest entry magnitude (the norm every residual in this package uses)."""
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def row_sum_norm(a) -> float:
    return float(np.max(np.sum(np.abs(a), axis=1)))


def _check_same_dim(a, b):
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")


def commutator(a, b) -> np.ndarray:
    _check_same_dim(a, b)
    return a @ b - b @ a


def anticommutator(a, b) -> np.ndarray:
    _check_same_dim(a, b)
    return a @ b + b @ a


def direct_sum(*blocks) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=np.complex128)
    i = 0
    for b in blocks:
        k = b.shape[0]
        out[i:i + k, i:i + k] = b
        i += k
    return out


def _taylor_terms(theta: float, target: float = 1e-16) -> int:
    # remainder of exp series beyond order q is bounded by theta^(q+1)/(q+1)! * e^theta
    q = 1
    while theta ** (q + 1) / factorial(q + 1) * np.exp(theta) >= target:
        q += 1
    return q


_THETA = 0.5
_NTERMS = _taylor_terms(_THETA)


def mat_exp(a) -> np.ndarray:
    """Matrix exponential by scaling and squaring with a truncated Taylor kernel.

    The matrix is scaled by 2**-s so its row-sum norm is at most 1/2, the
    series is summed to a fixed order whose remainder is below 1e-16, and
    the result is squared s times.
    """
    a = operator(a)
    n = a.shape[0]
    nrm = row_sum_norm(a)
    s = 0
    if nrm > _THETA:
        s = int(np.ceil(np.log2(nrm / _THETA)))
    x = a / (2.0 ** s)
    # Horner form: I + x(I + x/2(I + x/3(...)))
    out = identity(n)
    for k in range(_NTERMS, 0, -1):
        out = identity(n) + (x @ out) / k
    for _ in range(s):
        out = out @ out
    return out


def char_poly(a) -> np.ndarray:
    """Characteristic polynomial coefficients of ``a``, highest degree first.

    Faddeev-LeVerrier recursion; coefficients are polynomial in the entries,
    so unlike eigenvalues they stay well conditioned for defective matrices.
    """
    a = operator(a)
    n = a.shape[0]
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    m = np.zeros_like(a)
    for k in range(1, n + 1):
        m = a @ m + coeffs[k - 1] * identity(n)
        coeffs[k] = -np.trace(a @ m) / k
    return coeffs


def poly_from_roots(roots) -> np.ndarray:
    coeffs = np.array([1.0 + 0j])
    for r in roots:
        coeffs = np.convolve(coeffs, np.array([1.0, -r], dtype=np.complex128))
    return coeffs


def eig_small(a) -> np.ndarray:
    """Eigenvalues (with multiplicity) of a matrix of dimension at most 6.

    Each eigenvalue is checked against the characteristic polynomial;
    a failed check raises :class:`EigenError` rather than returning junk.
    """
    a = operator(a)
    n = a.shape[0]
    if n > MAX_EIG_DIM:
        raise DimensionError(f"eig_small supports dim <= {MAX_EIG_DIM}, got {n}")
    try:
        lam = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise EigenError(str(exc)) from exc
    scale = max(1.0, norm_inf(a) * n)
    coeffs = char_poly(a)
    resid = np.abs(np.polyval(coeffs, lam))
    if np.any(resid > 1e-9 * scale ** n):
        raise EigenError(f"characteristic residual {resid.max():.3e} too large")
    return lam[np.lexsort((lam.imag, lam.real))]


def spectrum_deviation(a, expected) -> float:
    """Distance between the spectrum of ``a`` and the multiset ``expected``.

    Measured on characteristic-polynomial coefficients, with the degree-k
    coefficient divided by max(1, |a|)^k. This is zero iff the spectra
    coincide and remains accurate when ``a`` is defective (nilpotent parts),
    where eigenvalue distances are limited to about sqrt(machine epsilon).
    """
    a = operator(a)
    expected = np.asarray(expected, dtype=np.complex128)
    if expected.shape != (a.shape[0],):
        raise DimensionError("expected spectrum must have one entry per dimension")
    scale = max(1.0, norm_inf(a), float(np.max(np.abs(expected))))
    diff = np.abs(char_poly(a) - poly_from_roots(expected))
    return float(max(diff[k] / scale ** k for k in range(1, len(diff))))


def eigenvalue_distance(a, expected) -> float:
    """Max distance after sorting both multisets (eigenvalue-level comparison)."""
    lam = eig_small(a)
    exp_ = np.sort_complex(np.asarray(expected, dtype=np.complex128))
    lam = lam[np.lexsort((lam.imag, lam.real))]
    exp_ = exp_[np.lexsort((exp_.imag, exp_.real))]
    return float(np.max(np.abs(lam - exp_)))


@dataclass(frozen=True)
class Fit:
    coefficients: np.ndarray
    residual: float
    rank: int
    rank_deficient: bool


def lstsq_fit(target, basis) -> Fit:
    """Entrywise least-squares fit of ``target`` by a linear combination of ``basis``.

    The residual is the Frobenius norm of ``target - sum(c_i * basis_i)``.
    Rank-deficient bases are flagged; coefficients are then minimal-norm.
    """
    target = operator(target)
    basis = [operator(b) for b in basis]
    if not basis:
        raise ValueError("basis must be non-empty")
    for b in basis:
        _check_same_dim(target, b)
    design = np.stack([b.ravel() for b in basis], axis=1)
    coeffs, _, rank, _ = np.linalg.lstsq(design, target.ravel(), rcond=None)
    resid = float(np.linalg.norm(target.ravel() - design @ coeffs))
    return Fit(coeffs, resid, int(rank), int(rank) < len(basis))
