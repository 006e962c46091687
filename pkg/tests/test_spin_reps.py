import numpy as np
import pytest
from hypothesis import given, strategies as st

from relspin.minkowski import MomentumContext
from relspin.numkit import commutator, identity, norm_inf, spectrum_deviation
from relspin.spin_reps import (
    PAULI,
    boost_rep,
    casimir_residual,
    make_spin_rep,
    parse_spin,
    pl_components,
    pl_components_by_boost,
    rest_basis,
    rotation_rep,
    spin_eigenstates,
    spin_operators,
    spin_operators_from_pl,
    su2_residual,
)
from strategies import contexts

spins = st.sampled_from([0.5, 1.0, 1.5])
hands = st.sampled_from([1, -1])


def test_spin_half_is_pauli_over_two():
    rep = make_spin_rep("1/2")
    for J, s in zip(rep.J, PAULI):
        assert norm_inf(J - s / 2) == 0.0


def test_spin_one_and_zero():
    assert np.array_equal(np.diag(make_spin_rep(1).J[2]).real, [1, 0, -1])
    zero = make_spin_rep(0)
    assert zero.dim == 1 and all(norm_inf(j) == 0 for j in zero.J)


@pytest.mark.parametrize("bad", [0.3, "2/3", -1, 3.5])
def test_make_spin_rep_rejects(bad):
    with pytest.raises(ValueError):
        make_spin_rep(bad)


@pytest.mark.parametrize("s", [0.5, 1, 1.5, 2, 3])
def test_rep_invariants(s):
    rep = make_spin_rep(s)
    assert su2_residual(rep.J) <= 1e-13
    assert casimir_residual(rep.J, parse_spin(s)) <= 1e-13
    assert np.array_equal(np.diag(rep.J[2]).real, rep.weights)


def test_pl_components_reference(ref_ctx):
    pl = pl_components(ref_ctx, make_spin_rep(0.5))
    s1, s2, s3 = PAULI
    assert norm_inf(pl.w0 - 0.375 * s3) <= 1e-15
    assert norm_inf(pl.w[2] - 0.625 * s3) <= 1e-15
    assert norm_inf(pl.w[0] - s1 / 2) <= 1e-15 and norm_inf(pl.w[1] - s2 / 2) <= 1e-15


def test_pl_components_at_rest(rest_ctx):
    rep = make_spin_rep(1)
    pl = pl_components(rest_ctx, rep)
    assert norm_inf(pl.w0) == 0 and all(norm_inf(w - rest_ctx.m * j) == 0 for w, j in zip(pl.w, rep.J))


@given(contexts(), spins)
def test_pl_components_match_boost_and_transversality(ctx, s):
    rep = make_spin_rep(s)
    a, b = pl_components(ctx, rep), pl_components_by_boost(ctx, rep)
    scale = max(1.0, ctx.p0) ** 2
    assert a.transversality_residual() <= 1e-12 * scale
    assert norm_inf(a.w0 - b.w0) <= 1e-12 * scale
    assert max(norm_inf(x - y) for x, y in zip(a.w, b.w)) <= 1e-12 * scale


def test_spin_operators_reference(ref_ctx):
    ops = spin_operators(ref_ctx, make_spin_rep(0.5))
    assert norm_inf(ops.plus[0] - np.array([[0, 1], [0.25, 0]])) <= 1e-15
    assert norm_inf(ops.plus[2] - PAULI[2] / 2) <= 1e-15
    assert spectrum_deviation(ops.plus[0], [0.5, -0.5]) <= 1e-15


def test_spin_operators_at_rest(rest_ctx):
    rep = make_spin_rep(1.5)
    ops = spin_operators(rest_ctx, rep)
    for h in (1, -1):
        assert all(norm_inf(a - b) == 0 for a, b in zip(ops.get(h), rep.J))
    with pytest.raises(ValueError):
        ops.get(0)


@given(contexts(), spins, hands)
def test_spin_operator_invariants(ctx, s, h):
    rep = make_spin_rep(s)
    ops = spin_operators(ctx, rep)
    S = ops.get(h)
    assert su2_residual(S) <= 1e-10
    assert casimir_residual(S, s) <= 1e-10
    assert norm_inf(ops.along(ctx.p, h) - rep.dot(ctx.p)) <= 1e-12 * max(1.0, ctx.pmag)
    for k in range(3):
        assert spectrum_deviation(S[k], rep.weights) <= 1e-8
    other = spin_operators_from_pl(ctx, rep).get(h)
    assert max(norm_inf(a - b) for a, b in zip(S, other)) <= 1e-10


@given(contexts(min_norm=0.5), spins)
def test_chiralities_do_not_commute(ctx, s):
    ops = spin_operators(ctx, make_spin_rep(s))
    assert max(norm_inf(commutator(ops.plus[i], ops.minus[j])) for i in range(3) for j in range(3)) > 1e-3


def test_boost_rep_reference(ref_ctx, rest_ctx):
    rep = make_spin_rep(0.5)
    r2 = np.sqrt(2)
    assert norm_inf(boost_rep(ref_ctx, rep, 1) - np.diag([r2, 1 / r2])) <= 1e-15
    assert norm_inf(boost_rep(rest_ctx, rep, -1) - identity(2)) == 0.0
    assert norm_inf(boost_rep(ref_ctx, rep, 1) @ boost_rep(ref_ctx, rep, -1) - identity(2)) <= 1e-12


@given(contexts(), spins, hands)
def test_boost_conjugation_and_parity_swap(ctx, s, h):
    rep = make_spin_rep(s)
    U, Uinv = boost_rep(ctx, rep, h), boost_rep(ctx, rep, -h)
    S = spin_operators(ctx, rep).get(h)
    assert max(norm_inf(S[k] - U @ rep.J[k] @ Uinv) for k in range(3)) <= 1e-10
    flipped = ctx.with_momentum(-ctx.p)
    assert norm_inf(boost_rep(flipped, rep, h) - Uinv) <= 1e-12
    assert max(norm_inf(a - b) for a, b in zip(spin_operators(flipped, rep).get(h),
                                               spin_operators(ctx, rep).get(-h))) <= 1e-12


def test_spin_eigenstates_reference(ref_ctx):
    psi = spin_eigenstates(ref_ctx, make_spin_rep(0.5), 1)
    assert np.allclose(psi[:, 0], [np.sqrt(2), 0])


@given(contexts(), spins, hands)
def test_boosted_eigenstates_keep_eigenvalue(ctx, s, h):
    rep = make_spin_rep(s)
    psi = spin_eigenstates(ctx, rep, h)
    S3 = spin_operators(ctx, rep).get(h)[2]
    assert norm_inf(S3 @ psi - psi * rep.weights) <= 1e-10 * max(1.0, norm_inf(psi))


@pytest.mark.parametrize("axis", [[1, 0, 0], [0, 0, -1], [1, 2, 2]])
def test_rest_basis_along_axis(axis):
    rep = make_spin_rep(1)
    B = rest_basis(rep, axis)
    n = np.array(axis) / np.linalg.norm(axis)
    assert norm_inf(rep.dot(n) @ B - B * rep.weights) <= 1e-12


def test_rotation_rep_full_turn_sign():
    # half-integer spins pick up -1 under a 2 pi rotation
    assert norm_inf(rotation_rep([0, 0, 1], 2 * np.pi, make_spin_rep(0.5)) + identity(2)) <= 1e-12
    assert norm_inf(rotation_rep([0, 1, 0], 2 * np.pi, make_spin_rep(1)) - identity(3)) <= 1e-12
