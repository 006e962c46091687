import numpy as np
import pytest
from hypothesis import given, strategies as st

from relspin.dirac import (
    ConstructionError,
    LAMBDAS,
    bar,
    boost_4,
    clifford_residual,
    covariant_parity,
    covariant_parity_displayed,
    dirac_basis,
    dirac_context,
    dirac_spinors,
    direct_sum_spin,
    direct_sum_spin_gamma5,
    fundamental_equation_residual,
    gamma_tilde,
    parity_nonexistence_fit,
    parity_squared_boost,
)
from relspin.dynamics import dirac_hamiltonian
from relspin.minkowski import MomentumContext
from relspin.numkit import identity, norm_inf
from relspin.spin_reps import PAULI, make_spin_rep, su2_residual, casimir_residual
from strategies import contexts

r2 = np.sqrt(2)


def test_basis_relations():
    b = dirac_basis()
    assert clifford_residual(b.gamma) == 0.0
    g5 = 1j * b.gamma[0] @ b.gamma[1] @ b.gamma[2] @ b.gamma[3]
    assert norm_inf(g5 - b.gamma5) <= 1e-15
    for k in range(3):
        assert norm_inf(b.Sigma[k] - np.kron(np.eye(2), PAULI[k])) == 0.0
        assert norm_inf(b.alpha[k] - np.kron(np.diag([-1, 1]), PAULI[k])) == 0.0
    assert norm_inf(b.sigma_tensor[1, 2] - b.Sigma[2] / 2) <= 1e-15


def test_direct_sum_spin_reference(ref_ctx, rest_ctx):
    S = direct_sum_spin(ref_ctx)
    assert norm_inf(S[2] - np.kron(np.eye(2), PAULI[2] / 2)) <= 1e-15
    assert norm_inf(S[0][2:, 2:] - np.array([[0, 1], [0.25, 0]])) <= 1e-15
    assert norm_inf(S[0][:2, :2] - np.array([[0, 0.25], [1, 0]])) <= 1e-15
    for k, Sk in enumerate(direct_sum_spin(rest_ctx)):
        assert norm_inf(Sk - np.kron(np.eye(2), PAULI[k] / 2)) == 0.0


@given(contexts())
def test_direct_sum_spin_forms_agree(ctx):
    a, b = direct_sum_spin(ctx), direct_sum_spin_gamma5(ctx)
    scale = max(1.0, ctx.p0 / ctx.m) ** 2
    assert max(norm_inf(x - y) for x, y in zip(a, b)) <= 1e-12 * scale
    assert su2_residual(a) <= 1e-10 * scale
    assert casimir_residual(a, 0.5) <= 1e-10 * scale


def test_gamma_tilde_at_rest(rest_ctx):
    for a, b in zip(gamma_tilde(rest_ctx), dirac_basis().gamma):
        assert norm_inf(a - b) == 0.0


@given(contexts())
def test_gamma_tilde_slash_identity(ctx):
    gt = gamma_tilde(ctx)
    diff = ctx.p0 * gt[0] - sum(ctx.p[k] * gt[k + 1] for k in range(3)) - dirac_basis().slash(ctx.four_momentum)
    assert norm_inf(diff) <= 1e-12 * max(1.0, ctx.p0) ** 2


def test_gamma_tilde_bad_tolerance_raises(ref_ctx):
    # a negative tolerance cannot be met, exercising the constructor guard
    with pytest.raises(ConstructionError):
        gamma_tilde(ref_ctx, check_tol=-1.0)


def test_gamma_tilde_anticommutator_measures_spin_difference(ref_ctx):
    # {g0, gt^k} = 2 diag(S+^k - S-^k), nonzero once p is off the axis of k
    gt = gamma_tilde(ref_ctx)
    S = direct_sum_spin(ref_ctx)
    ac = gt[0] @ gt[1] + gt[1] @ gt[0]
    assert norm_inf(ac - 2 * np.block([[S[0][2:, 2:] - S[0][:2, :2], np.zeros((2, 2))],
                                       [np.zeros((2, 2)), S[0][2:, 2:] - S[0][:2, :2]]])) <= 1e-14
    assert clifford_residual(gt) > 1.0


def test_spinor_reference(ref_ctx, rest_ctx):
    u, v = dirac_spinors(ref_ctx)
    assert np.allclose(u[0.5], [1 / r2, 0, r2, 0], atol=1e-15)
    u0, _ = dirac_spinors(rest_ctx)
    assert np.array_equal(u0[0.5], [1, 0, 1, 0])
    d = dirac_context(ref_ctx)
    assert fundamental_equation_residual(d, u[0.5]) <= 1e-12


@given(contexts())
def test_spinor_properties(ctx):
    u, v = dirac_spinors(ctx)
    b = dirac_basis()
    H = dirac_hamiltonian(ctx)
    sl = b.slash(ctx.four_momentum) - ctx.m * identity(4)
    S3 = direct_sum_spin(ctx)[2]
    scale = max(1.0, ctx.p0 / ctx.m) ** 2
    for i, a in enumerate(LAMBDAS):
        assert norm_inf(sl @ u[a]) <= 1e-11 * scale
        assert norm_inf(S3 @ u[a] - a * u[a]) <= 1e-11 * scale
        assert norm_inf(H @ v[a] + ctx.p0 * v[a]) <= 1e-11 * scale
        assert abs(np.vdot(u[a], u[a]) - 2 * ctx.p0 / ctx.m) <= 1e-11 * scale
        for j, c in enumerate(LAMBDAS):
            assert abs(bar(u[a]) @ u[c] - 2 * (i == j)) <= 1e-11 * scale
            assert abs(bar(v[a]) @ v[c] + 2 * (i == j)) <= 1e-11 * scale
    basis = np.column_stack([u[0.5], u[-0.5], v[0.5], v[-0.5]])
    assert np.linalg.matrix_rank(basis) == 4


def test_random_vector_is_not_a_solution(ref_ctx):
    d = dirac_context(ref_ctx)
    x = np.random.default_rng(0).normal(size=4)
    assert fundamental_equation_residual(d, x) > 1e-2


def test_gamma0_image_solves_the_inverted_equation(ref_ctx):
    d = dirac_context(ref_ctx)
    g0 = dirac_basis().gamma[0]
    inverted = ref_ctx.with_momentum(-ref_ctx.p)
    for a in LAMBDAS:
        assert fundamental_equation_residual(d, g0 @ d.u[a], momentum=inverted) <= 1e-12
        # at the same momentum the image is not a solution
        assert fundamental_equation_residual(d, g0 @ d.u[a]) > 1e-2


def test_parity_at_rest(rest_ctx):
    assert norm_inf(covariant_parity(rest_ctx) - identity(4)) == 0.0
    assert norm_inf(covariant_parity_displayed(rest_ctx) - identity(4)) == 0.0


def test_parity_blocks_reference(ref_ctx):
    P = covariant_parity(ref_ctx)
    u = dirac_spinors(ref_ctx)[0][0.5]
    # the upper block of P takes Psi- = (1/sqrt2, 0) to Psi+ = (sqrt2, 0)
    assert np.allclose(P[:2, :2] @ u[:2], u[2:])
    assert np.allclose(P[2:, 2:] @ u[2:], u[:2])
    assert norm_inf(parity_squared_boost(ref_ctx, 1) - np.diag([2, 0.5])) <= 1e-15
    assert norm_inf(boost_4(ref_ctx)[2:, 2:] @ boost_4(ref_ctx)[2:, 2:] - np.diag([2, 0.5])) <= 1e-15


@given(contexts())
def test_chiral_parity_swaps_components(ctx):
    b = dirac_basis()
    P = covariant_parity(ctx)
    u = dirac_spinors(ctx)[0]
    scale = max(1.0, ctx.p0 / ctx.m) ** 2
    for a in LAMBDAS:
        assert norm_inf(P @ u[a] - b.gamma[0] @ u[a]) <= 1e-11 * scale
    # gamma0 P is an involution even though P itself is not
    assert norm_inf((b.gamma[0] @ P) @ (b.gamma[0] @ P) - identity(4)) <= 1e-10 * scale


def test_parity_square_is_not_identity(ref_ctx):
    P = covariant_parity(ref_ctx)
    assert norm_inf(P @ P - identity(4)) > 1.0


def test_displayed_parity_does_not_match_gamma0(ref_ctx):
    u = dirac_spinors(ref_ctx)[0][0.5]
    diff = covariant_parity_displayed(ref_ctx) @ u - dirac_basis().gamma[0] @ u
    assert norm_inf(diff) > 1.0


@pytest.mark.parametrize("s,linear_big", [(0.5, False), (1, True), (1.5, True)])
def test_parity_nonexistence_fit(ref_ctx, s, linear_big):
    for h in (1, -1):
        linear, full = parity_nonexistence_fit(ref_ctx, s, h)
        assert full <= 1e-10
        assert (linear > 1e-3) == linear_big
        if not linear_big:
            assert linear <= 1e-12


def test_parity_fit_rejects_rest(rest_ctx):
    with pytest.raises(ValueError):
        parity_nonexistence_fit(rest_ctx)


@given(contexts(min_norm=0.5))
def test_spin_one_linear_fit_fails_off_rest(ctx):
    if ctx.pmag >= ctx.m / 2:
        assert parity_nonexistence_fit(ctx, 1)[0] > 1e-3
