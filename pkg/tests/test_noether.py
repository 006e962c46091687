import numpy as np
import pytest
from hypothesis import given

from relspin.dirac import LAMBDAS, bar, dirac_basis, dirac_context
from relspin.noether import (
    ORBITAL_NOTE,
    antisymmetry_residual,
    canonical_vs_decomposed_check,
    canonical_vs_decomposed_residual,
    conservation_elements,
    conserved_charges,
    dual_residual,
    energy_momentum,
    gordon_residual,
    spin_current_conservation_check,
    spin_tensor,
)
from relspin.numkit import commutator, norm_inf
from strategies import contexts


def test_rest_spin_tensor(rest_ctx):
    d = dirac_context(rest_ctx)
    rest = dirac_basis().sigma_tensor
    for form in ("conjugated", "commutator"):
        assert np.max(np.abs(spin_tensor(d, form) - rest)) <= 1e-15


def test_unknown_form(ref_ctx):
    with pytest.raises(ValueError):
        spin_tensor(dirac_context(ref_ctx), "symmetric")


@given(contexts())
def test_conjugated_tensor_properties(ctx):
    d = dirac_context(ctx)
    St = spin_tensor(d)
    scale = max(1.0, ctx.p0 / ctx.m) ** 2
    assert antisymmetry_residual(St) == 0.0
    assert dual_residual(d) <= 1e-10 * scale


def test_commutator_form_differs(ref_ctx):
    d = dirac_context(ref_ctx)
    assert antisymmetry_residual(spin_tensor(d, "commutator")) == 0.0
    assert dual_residual(d, "commutator") > 1e-2


@given(contexts())
def test_energy_momentum_bilinears(ctx):
    d = dirac_context(ctx)
    scale = max(1.0, ctx.p0 / ctx.m)
    assert gordon_residual(d) <= 1e-10 * scale
    T = energy_momentum(d).T
    # ubar g^0 u p^0 = 2 p0^2 / m on the diagonal
    for a in range(2):
        assert T[a, a, 0, 0] == pytest.approx(2 * ctx.p0 ** 2 / ctx.m, rel=1e-10)


def test_rest_conservation_sectors(rest_ctx):
    d = dirac_context(rest_ctx)
    b = dirac_basis()
    assert norm_inf(commutator(b.sigma_tensor[1, 2], b.gamma[0])) == 0.0
    assert norm_inf(commutator(b.sigma_tensor[0, 1], b.gamma[0])) > 0.1
    el = conservation_elements(d)
    assert el["rotation"] <= 1e-15
    # the operator commutator is nonzero, but its u-u bilinear still vanishes
    assert el["boost"] <= 1e-15
    assert conservation_elements(d, right="v")["boost"] > 0.1


@given(contexts())
def test_rotation_sector_conserved(ctx):
    el = conservation_elements(dirac_context(ctx))
    assert el["rotation"] <= 1e-9 * max(1.0, ctx.p0 / ctx.m) ** 2


@given(contexts())
def test_boost_sector_on_positive_energy_vanishes(ctx):
    # [S^{0i}, g.p] is odd under the energy projectors, so the u-u element is zero
    el = conservation_elements(dirac_context(ctx))
    assert el["boost"] <= 1e-9 * max(1.0, ctx.p0 / ctx.m) ** 2


def test_conservation_check_entries(ref_ctx):
    rot, boost = spin_current_conservation_check(dirac_context(ref_ctx))
    assert rot.status == "pass"
    assert boost.status == "fail" and boost.bound == "lower"


@given(contexts())
def test_canonical_vs_decomposed(ctx):
    d = dirac_context(ctx)
    assert canonical_vs_decomposed_residual(d) <= 1e-9 * max(1.0, ctx.p0 / ctx.m) ** 2


def test_canonical_vs_decomposed_reference(ref_ctx, rest_ctx):
    assert canonical_vs_decomposed_check(dirac_context(ref_ctx), tol=1e-10).status == "pass"
    assert canonical_vs_decomposed_residual(dirac_context(rest_ctx)) <= 1e-15
    with pytest.raises(ValueError):
        canonical_vs_decomposed_residual(dirac_context(ref_ctx), order="sideways")


def test_charges_reference(ref_ctx, rest_ctx):
    for ctx in (ref_ctx, rest_ctx):
        q = conserved_charges(dirac_context(ctx))
        assert q.density_ratio[0.5] == pytest.approx(0.5, abs=1e-10)
        assert q.density_ratio[-0.5] == pytest.approx(-0.5, abs=1e-10)
        assert q.offdiagonal <= 1e-10
        assert q.time_derivative <= 1e-10
        assert q.orbital_note == ORBITAL_NOTE
