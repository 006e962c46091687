"""Named verification suites. Each returns a list of CheckResult; run_suite wraps them in a report."""
from __future__ import annotations

import numpy as np

from . import dirac as dr
from . import dynamics as dy
from . import noether as no
from .config import SUITES, RunConfig
from .derivation import (
    ansatz_su2_residual,
    coefficient_condition_residuals,
    solve_coefficient_conditions,
    transformation_identity_check,
)
from .little_group import little_group_check, merge_little_group
from .minkowski import MomentumContext
from .numkit import commutator, eigenvalue_distance, identity, mat_exp, norm_inf, spectrum_deviation
from .report import LOWER, VerificationReport, aggregate, check, combine
from .sampling import at_least, lorentz_pairs, momentum_samples
from .spin_reps import (
    boost_rep,
    casimir_residual,
    make_spin_rep,
    pl_components,
    pl_components_by_boost,
    spin_eigenstates,
    spin_operators,
    spin_operators_from_pl,
    su2_residual,
)

LITTLE_GROUP_PAIRS = 200
REFERENCE = (0.0, 0.0, 0.75)  # in units of m


def _samples(cfg: RunConfig):
    return momentum_samples(cfg.samples, cfg.mass, cfg.seed, cfg.momentum_cap)


def _ref(cfg: RunConfig) -> MomentumContext:
    return MomentumContext(cfg.mass, np.array(REFERENCE) * cfg.mass)


def _tag(s) -> str:
    return f"s={s:g}"


def algebra_suite(cfg: RunConfig) -> list:
    tol = lambda d: cfg.tol("algebra", d)
    samples = _samples(cfg)
    fast = at_least(samples)
    out = []
    for s in cfg.spins:
        rep = make_spin_rep(s)
        t = _tag(s)
        ops = {c.p.tobytes(): spin_operators(c, rep) for c in samples}
        get = lambda c: ops[c.p.tobytes()]
        for h, hs in ((1, "+"), (-1, "-")):
            out.append(aggregate(f"algebra.su2[{t},{hs}]", "[S^i, S^j] = i eps_ijk S^k", tol(1e-10), samples,
                                 lambda c: su2_residual(get(c).get(h))))
            out.append(aggregate(f"algebra.casimir[{t},{hs}]", "S.S = s(s+1) I", tol(1e-10), samples,
                                 lambda c: casimir_residual(get(c).get(h), s)))
            out.append(aggregate(f"algebra.helicity[{t},{hs}]", "S(p).p = J.p", tol(1e-12), samples,
                                 lambda c: norm_inf(get(c).along(c.p, h) - rep.dot(c.p))))
            out.append(aggregate(
                f"algebra.boost_conjugation[{t},{hs}]", "S^k(p) = U[L(p)] J^k U[L(p)]^-1", tol(1e-10), samples,
                lambda c: max(norm_inf(get(c).get(h)[k] - boost_rep(c, rep, h) @ rep.J[k] @ boost_rep(c, rep, -h))
                              for k in range(3))))
            out.append(aggregate(
                f"algebra.spectrum[{t},{hs}]", "spectrum of S^k(p) = {-s, ..., s}", tol(1e-8), samples,
                lambda c: max(spectrum_deviation(get(c).get(h)[k], rep.weights) for k in range(3))))
            out.append(aggregate(
                f"algebra.spectrum_eigenvalues[{t},{hs}]", "spectrum of S^k(p) = {-s, ..., s}, eigenvalue distance",
                tol(1e-8), samples,
                lambda c: max(eigenvalue_distance(get(c).get(h)[k], rep.weights) for k in range(3)), info=True))

            def eig_resid(c):
                psi = spin_eigenstates(c, rep, h)
                S3 = get(c).get(h)[2]
                return norm_inf(S3 @ psi - psi * rep.weights)

            out.append(aggregate(f"algebra.boosted_eigenstates[{t},{hs}]", "S^3(p) Psi(p, l) = l Psi(p, l)",
                                 tol(1e-10), samples, eig_resid))
        out.append(aggregate(
            f"algebra.equal_casimir[{t}]", "S+.S+ = S-.S-", tol(1e-10), samples,
            lambda c: norm_inf(sum(x @ x for x in get(c).plus) - sum(x @ x for x in get(c).minus))))
        out.append(aggregate(
            f"algebra.pl_cross_oracle[{t}]", "closed form S = S from Pauli-Lubanski components", tol(1e-10), samples,
            lambda c: max(norm_inf(a - b) for a, b in zip(get(c).plus + get(c).minus,
                                                          spin_operators_from_pl(c, rep).plus
                                                          + spin_operators_from_pl(c, rep).minus))))

        def pl_resid(c):
            a, b = pl_components(c, rep), pl_components_by_boost(c, rep)
            return max([norm_inf(a.w0 - b.w0)] + [norm_inf(x - y) for x, y in zip(a.w, b.w)]
                       + [a.transversality_residual()])

        out.append(aggregate(f"algebra.pl_components[{t}]", "w = L(p) (0, m J), p.w = 0", tol(1e-10), samples,
                             pl_resid))
        out.append(aggregate(
            f"algebra.parity_swap[{t}]", "U+[L(-p)] = U-[L(p)], S+(-p) = S-(p)", tol(1e-12), samples,
            lambda c: max([norm_inf(boost_rep(c.with_momentum(-c.p), rep, 1) - boost_rep(c, rep, -1))]
                          + [norm_inf(a - b) for a, b in zip(spin_operators(c.with_momentum(-c.p), rep).plus,
                                                             get(c).minus)])))
        out.append(aggregate(
            f"algebra.chirality_noncommutation[{t}]", "max |[S+^i, S-^j]| > floor at |p| >= m/2", 1e-3, fast,
            lambda c: max(norm_inf(commutator(get(c).plus[i], get(c).minus[j])) for i in range(3) for j in range(3)),
            bound=LOWER))
    return out


def little_group_suite(cfg: RunConfig) -> list:
    pairs = lorentz_pairs(min(LITTLE_GROUP_PAIRS, cfg.samples), cfg.mass, cfg.seed, cfg.momentum_cap)
    out = []
    for s in cfg.spins:
        rep = make_spin_rep(s)
        per = [little_group_check(lam, ctx, rep, tol=cfg.tol("little-group", 1e-9)) for lam, ctx in pairs]
        out.extend(merge_little_group(per))
    return out


def derivation_suite(cfg: RunConfig) -> list:
    tol = lambda d: cfg.tol("derivation", d)
    m = cfg.mass
    out = []
    for mass in (m / 2, m, 2 * m):
        sols = solve_coefficient_conditions(mass)
        out.append(check(f"derivation.solution_count[m={mass:g}]", "two coefficient triples (a, b, c)",
                         abs(len(sols) - 2), 0.0))
        want = [(-1 / mass ** 2, 1 / mass ** 2, 1j / mass ** 2), (-1 / mass ** 2, 1 / mass ** 2, -1j / mass ** 2)]
        dev = max(abs(x - y) for s, w in zip(sols, want) for x, y in zip(s, w))
        out.append(check(f"derivation.solution_values[m={mass:g}]", "(a, b, c) = (-1, 1, +/-i)/m^2", dev,
                         tol(1e-12)))
        r = max(abs(x) for s in sols for p0 in mass * np.linspace(1, 11, 10)
                for x in coefficient_condition_residuals(*s, mass, p0))
        out.append(check(f"derivation.condition_residuals[m={mass:g}]", "r1 = r2 = r3 = 0 for all p0", r,
                         tol(1e-10)))
    samples = _samples(cfg)
    fast = at_least(samples)
    sols = solve_coefficient_conditions(m)
    for s in cfg.spins:
        rep = make_spin_rep(s)
        t = _tag(s)
        out.append(aggregate(f"derivation.ansatz_solution[{t}]", "ansatz with solved coefficients closes su(2)",
                             tol(1e-10), samples,
                             lambda c: max(ansatz_su2_residual(c, rep, *sol) for sol in sols)))
        out.append(aggregate(
            f"derivation.ansatz_perturbed[{t}]", "ansatz with c scaled by 0.9 or 1.1 breaks su(2)", 1e-3, fast,
            lambda c: min(ansatz_su2_residual(c, rep, a, b, f * cc) for a, b, cc in sols for f in (0.9, 1.1)),
            bound=LOWER))
    out.append(combine("derivation.transformation_identity",
                       "S+(p) = exp(sigma.xi/2) (sigma/2) exp(-sigma.xi/2), sinh/cosh expansion",
                       [transformation_identity_check(c, tol(1e-10)) for c in samples]))
    return out


def _dirac_contexts(cfg):
    return [(c, dr.dirac_context(c)) for c in _samples(cfg)]


def dirac_suite(cfg: RunConfig) -> list:
    tol = lambda d: cfg.tol("dirac", d)
    b = dr.dirac_basis()
    pairs = _dirac_contexts(cfg)
    samples = [c for c, _ in pairs]
    D = {c.p.tobytes(): d for c, d in pairs}
    get = lambda c: D[c.p.tobytes()]
    g0 = b.gamma[0]
    rng = np.random.default_rng(cfg.seed + 7)
    phis = {c.p.tobytes(): rng.normal(size=3) for c in samples}
    out = [
        check("dirac.gamma_clifford", "{gamma^mu, gamma^nu} = 2 g^{mu nu}", dr.clifford_residual(b.gamma), tol(1e-12)),
        check("dirac.gamma5", "gamma5 = i gamma0 gamma1 gamma2 gamma3",
              norm_inf(b.gamma5 - 1j * b.gamma[0] @ b.gamma[1] @ b.gamma[2] @ b.gamma[3]), tol(1e-12)),
    ]
    out.append(aggregate("dirac.gamma_tilde_slash", "gamma-tilde(p).p = gamma.p", tol(1e-12), samples,
                         lambda c: norm_inf(dr.slash_with(get(c).gamma_tilde, c.four_momentum)
                                            - b.slash(c.four_momentum))))
    out.append(aggregate("dirac.gamma_tilde_clifford", "{gamma-tilde^mu, gamma-tilde^nu} = 2 g^{mu nu}",
                         tol(1e-10), samples, lambda c: dr.clifford_residual(get(c).gamma_tilde)))
    rest = dr.dirac_context(MomentumContext(cfg.mass, np.zeros(3)))
    out.append(check("dirac.gamma_tilde_rest", "gamma-tilde(0) = gamma",
                     max(norm_inf(x - y) for x, y in zip(rest.gamma_tilde, b.gamma)), tol(1e-12)))
    out.append(aggregate("dirac.fundamental_u", "(gamma-tilde(p).p - m) u(p, l) = 0", tol(1e-12), samples,
                         lambda c: max(dr.fundamental_equation_residual(get(c), get(c).u[l]) for l in dr.LAMBDAS)))
    out.append(aggregate("dirac.fundamental_gamma0_u", "(gamma-tilde(p).p - m) gamma0 u(p, l) = 0", tol(1e-12),
                         samples,
                         lambda c: max(dr.fundamental_equation_residual(get(c), g0 @ get(c).u[l])
                                       for l in dr.LAMBDAS)))
    out.append(aggregate(
        "dirac.fundamental_gamma0_u_inverted", "(gamma-tilde(p~).p~ - m) gamma0 u(p, l) = 0, p~ = (p0, -p)",
        tol(1e-12), samples,
        lambda c: max(dr.fundamental_equation_residual(get(c), g0 @ get(c).u[l], momentum=c.with_momentum(-c.p))
                      for l in dr.LAMBDAS)))
    out.append(aggregate("dirac.dirac_equation", "(gamma.p - m) u = 0", tol(1e-12), samples,
                         lambda c: max(norm_inf((b.slash(c.four_momentum) - c.m * identity(4)) @ get(c).u[l])
                                       for l in dr.LAMBDAS)))

    def norms(c):
        d = get(c)
        r = 0.0
        for a in dr.LAMBDAS:
            for bb in dr.LAMBDAS:
                r = max(r, abs(dr.bar(d.u[a]) @ d.u[bb] - 2 * (a == bb)))
                r = max(r, abs(dr.bar(d.v[a]) @ d.v[bb] + 2 * (a == bb)))
        return r

    out.append(aggregate("dirac.normalisation", "ubar u = 2 delta, vbar v = -2 delta", tol(1e-10), samples, norms))
    out.append(aggregate(
        "dirac.negative_energy", "H v = -p0 v", tol(1e-10), samples,
        lambda c: max(norm_inf(dy.dirac_hamiltonian(c) @ get(c).v[l] + c.p0 * get(c).v[l]) for l in dr.LAMBDAS)))
    out.append(aggregate(
        "dirac.completeness", "u(p, +-1/2), v(p, +-1/2) span C^4 (smallest singular value of unit columns)",
        1e-6, samples, lambda c: np.linalg.svd(dy.solution_basis(c), compute_uv=False)[-1], bound=LOWER))
    out.append(aggregate(
        "dirac.direct_sum_cross_oracle", "S-(p) + S+(p) = gamma5 Pauli-Lubanski form", tol(1e-10), samples,
        lambda c: max(norm_inf(x - y) for x, y in zip(get(c).spin, dr.direct_sum_spin_gamma5(c)))))
    out.append(aggregate("dirac.direct_sum_su2", "direct-sum spin closes su(2), S.S = 3/4", tol(1e-10), samples,
                         lambda c: max(su2_residual(get(c).spin), casimir_residual(get(c).spin, 0.5))))
    out.append(aggregate("dirac.u_spin_eigenvalue", "S^3(p) u(p, l) = l u(p, l)", tol(1e-10), samples,
                         lambda c: max(norm_inf(get(c).spin[2] @ get(c).u[l] - l * get(c).u[l])
                                       for l in dr.LAMBDAS)))

    def closure(c):
        d, phi = get(c), phis[c.p.tobytes()]
        D_ = mat_exp(1j * sum(phi[k] * d.spin[k] for k in range(3)))
        P = dy.energy_projectors(c)
        return max(norm_inf(P.minus @ D_ @ d.u[l]) for l in dr.LAMBDAS) / max(1.0, norm_inf(D_))

    out.append(aggregate("dirac.little_group_closure", "exp(i phi.S(p)) keeps span{u(p, l)}", tol(1e-10), samples,
                         closure))
    return out


def parity_suite(cfg: RunConfig) -> list:
    tol = lambda d: cfg.tol("parity", d)
    g0 = dr.dirac_basis().gamma[0]
    samples = _samples(cfg)
    fast = at_least(samples)
    spinors = {c.p.tobytes(): dr.dirac_spinors(c)[0] for c in samples}
    u = lambda c: spinors[c.p.tobytes()]
    I4 = identity(4)
    out = [
        aggregate("parity.displayed_on_u", "(p0 + Sigma.p gamma5)/m u = gamma0 u", tol(1e-10), samples,
                  lambda c: max(norm_inf(dr.covariant_parity_displayed(c) @ u(c)[l] - g0 @ u(c)[l])
                                for l in dr.LAMBDAS)),
        aggregate("parity.displayed_involution", "((p0 + Sigma.p gamma5)/m)^2 = I", tol(1e-10), samples,
                  lambda c: norm_inf(dr.covariant_parity_displayed(c) @ dr.covariant_parity_displayed(c) - I4)),
        aggregate("parity.chiral_blocks_on_u", "(p0 -/+ sigma.p)/m per chirality block: P u = gamma0 u",
                  tol(1e-10), samples,
                  lambda c: max(norm_inf(dr.covariant_parity(c) @ u(c)[l] - g0 @ u(c)[l]) for l in dr.LAMBDAS)),
        aggregate("parity.chiral_blocks_involution", "P^2 = I for the chirality-block operator", tol(1e-10),
                  samples, lambda c: norm_inf(dr.covariant_parity(c) @ dr.covariant_parity(c) - I4)),
        aggregate("parity.gamma0_composite_involution", "(gamma0 P)^2 = I", tol(1e-10), samples,
                  lambda c: norm_inf(g0 @ dr.covariant_parity(c) @ g0 @ dr.covariant_parity(c) - I4)),
        aggregate(
            "parity.two_boost_form", "U+/-^2 = cosh|xi| +/- sigma.p_hat sinh|xi|", tol(1e-10), samples,
            lambda c: max(norm_inf(mat_exp(h * sum(dr.PAULI[k] * c.xi[k] for k in range(3)))
                                   - dr.parity_squared_boost(c, h)) for h in (1, -1))),
        check("parity.rest_identity", "P(p = 0) = I",
              norm_inf(dr.covariant_parity(MomentumContext(cfg.mass, np.zeros(3))) - I4), tol(1e-12)),
        aggregate("parity.spin_half_linear_fit", "U^2 = a + b sigma.p_hat for s = 1/2", tol(1e-12), fast,
                  lambda c: dr.parity_nonexistence_fit(c, 0.5)[0]),
    ]
    for s in (1, 1.5):
        t = _tag(s)
        out.append(aggregate(f"parity.linear_fit_fails[{t}]", "U^2 is not a + b J.p_hat for s > 1/2", 1e-3, fast,
                             lambda c: min(dr.parity_nonexistence_fit(c, s, h)[0] for h in (1, -1)), bound=LOWER))

        def full(c):
            target = mat_exp(2 * make_spin_rep(s).dot(c.xi))
            return dr.parity_nonexistence_fit(c, s)[1] / max(1.0, np.linalg.norm(target))

        out.append(aggregate(f"parity.polynomial_fit[{t}]", "U^2 is a polynomial of degree 2s in J.p_hat "
                                                            "(relative residual)", tol(1e-10), fast, full))
    return out


def dynamics_suite(cfg: RunConfig) -> list:
    tol = lambda d: cfg.tol("dynamics", d)
    samples = _samples(cfg)
    ref = _ref(cfg)
    b = dr.dirac_basis()
    out = []
    vel = {c.p.tobytes(): dy.velocity_operator(c) for c in samples}
    V = lambda c: vel[c.p.tobytes()]
    out.append(aggregate("dynamics.hamiltonian_spectrum", "spectrum of H = {p0, p0, -p0, -p0}", tol(1e-8), samples,
                         lambda c: spectrum_deviation(dy.dirac_hamiltonian(c), [c.p0, c.p0, -c.p0, -c.p0])))

    def proj(c):
        P = dy.energy_projectors(c)
        H = dy.dirac_hamiltonian(c)
        return max(norm_inf(P.plus + P.minus - identity(4)), norm_inf(P.plus @ P.plus - P.plus),
                   norm_inf(P.minus @ P.minus - P.minus), norm_inf(P.plus @ P.minus),
                   norm_inf(H @ P.plus - c.p0 * P.plus) / c.p0, norm_inf(H @ P.minus + c.p0 * P.minus) / c.p0)

    out.append(aggregate("dynamics.energy_projectors", "L+ + L- = I, L^2 = L, L+ L- = 0, H L = +-p0 L", tol(1e-12),
                         samples, proj))
    out.append(aggregate("dynamics.velocity_spectrum", "spectrum of v^k = {+-p^k/p0}", tol(1e-8), samples,
                         dy.velocity_spectrum_residual))
    out.append(aggregate(
        "dynamics.velocity_spectrum_eigenvalues", "spectrum of v^k = {+-p^k/p0}, eigenvalue distance", tol(1e-8), samples,
        lambda c: max(eigenvalue_distance(V(c)[k], [c.p[k] / c.p0] * 2 + [-c.p[k] / c.p0] * 2) for k in range(3)),
        info=True))
    out.append(aggregate("dynamics.acceleration_spectrum", "spectrum of a^k = {0}", tol(1e-8), samples,
                         dy.acceleration_spectrum_residual))
    out.append(aggregate("dynamics.velocity_block_minus_plus", "L- v^k L+ = 0", tol(1e-10), samples,
                         lambda c: dy.cross_energy_blocks(c, V(c))["-+"]))
    out.append(aggregate("dynamics.velocity_block_plus_minus", "L+ v^k L- = 0", tol(1e-10), samples,
                         lambda c: dy.cross_energy_blocks(c, V(c))["+-"]))
    ab = dy.cross_energy_blocks(ref, b.alpha)
    out.append(check("dynamics.alpha_cross_blocks", "|L-/+ alpha^k L+/-| > 0.1 at p = (0, 0, 3/4) m",
                     min(ab.values()), 0.1, momentum=ref.p, bound=LOWER))
    out.append(aggregate("dynamics.acceleration_solution_elements", "w^dag a^k w' = 0 for H eigenvectors w, w'",
                         tol(1e-10), samples, lambda c: dy.solution_matrix_elements(c, dy.acceleration_operator(c))))
    for which in ("velocity", "acceleration"):
        out.append(aggregate(f"dynamics.{which}_closed_form", f"long-hand {which} expression vs commutator oracle",
                             1e-6, samples, lambda c, w=which: dy.closed_form_deviation(c, w), info=True))
    out.append(aggregate("dynamics.total_angular_momentum", "Sigma/2 - S(p) - eps M^i p^j = 0", tol(1e-10), samples,
                         lambda c: dy.total_angular_momentum_residual(c, dy.TAM_SIGN)))
    out.append(aggregate("dynamics.total_angular_momentum_reversed", "Sigma/2 - S(p) + eps M^i p^j, reversed "
                                                                     "cross product (rejected ordering)",
                         tol(1e-10), samples, lambda c: dy.total_angular_momentum_residual(c, -dy.TAM_SIGN),
                         info=True))
    out.append(aggregate("dynamics.hamiltonian_total_j", "[H, Sigma/2 + X x P] = 0", tol(1e-12), samples,
                         dy.hamiltonian_total_j_residual))
    out.append(aggregate("dynamics.boost_relation", "M^k = i U dU^-1/dp^k (finite differences)", tol(1e-6), samples,
                         dy.boost_relation_residual))
    out.append(aggregate("dynamics.locality", "i dM^j/dp^i - i dM^i/dp^j + [M^i, M^j] = 0", tol(1e-6), samples,
                         dy.locality_residual))

    def spin_motion(c):
        d = dr.dirac_context(c)
        H = dy.dirac_hamiltonian(c)
        return max(abs(d.u[a].conj() @ (1j * commutator(H, d.spin[k])) @ d.u[bb])
                   for k in range(3) for a in dr.LAMBDAS for bb in dr.LAMBDAS)

    out.append(aggregate("dynamics.spin_constant_of_motion", "u^dag i[H, S^k(p)] u' = 0", tol(1e-10), samples,
                         spin_motion))
    mixed = dy.zitterbewegung_comparison(ref, (2 ** -0.5, 2 ** -0.5), tol=tol(1e-10))
    single = dy.zitterbewegung_comparison(ref, (1.0, 0.0), tol=tol(1e-10))
    out.append(check("dynamics.zitterbewegung_alpha", "<alpha^3>(t) oscillates for mixed energies (peak-to-peak)",
                     float(np.ptp(mixed.alpha[:, 2])), 0.1, momentum=ref.p, bound=LOWER))
    out.append(check("dynamics.zitterbewegung_velocity", "<v^k>(t) constant for mixed energies (peak-to-peak)",
                     float(np.max(np.ptp(mixed.velocity, axis=0))), tol(1e-10), momentum=ref.p))
    out.append(check("dynamics.single_branch_constant", "single energy branch: all traces constant",
                     float(max(np.max(np.ptp(single.alpha, axis=0)), np.max(np.ptp(single.velocity, axis=0)))),
                     tol(1e-10), momentum=ref.p))
    out.append(check("dynamics.alpha_eigenvalues", "spectrum of alpha^k = {1, 1, -1, -1}",
                     max(spectrum_deviation(a, [1, 1, -1, -1]) for a in b.alpha), tol(1e-12)))
    return out


def noether_suite(cfg: RunConfig) -> list:
    tol = lambda d: cfg.tol("noether", d)
    pairs = _dirac_contexts(cfg)
    samples = [c for c, _ in pairs]
    D = {c.p.tobytes(): d for c, d in pairs}
    get = lambda c: D[c.p.tobytes()]
    st = {c.p.tobytes(): no.spin_tensor(D[c.p.tobytes()]) for c in samples}
    S = lambda c: st[c.p.tobytes()]
    fast = at_least(samples)
    rest = dr.dirac_context(MomentumContext(cfg.mass, np.zeros(3)))
    out = [
        aggregate("noether.spin_tensor_dual", "(1/2) eps_kij S^{ij}(p) = S^k(p), S = U Sigma U^-1", tol(1e-10),
                  samples, lambda c: no.dual_residual(get(c))),
        aggregate("noether.spin_tensor_dual_commutator", "(1/2) eps_kij (i/4)[gt^i, gt^j] = S^k(p)", tol(1e-10),
                  samples, lambda c: no.dual_residual(get(c), "commutator")),
        aggregate("noether.spin_tensor_forms_agree", "U Sigma^{rs} U^-1 = (i/4)[gt^r, gt^s]", tol(1e-10), samples,
                  lambda c: float(np.max(np.abs(S(c) - no.spin_tensor(get(c), "commutator"))))),
        aggregate("noether.spin_tensor_antisymmetry", "S^{rs} = -S^{sr}", tol(1e-15), samples,
                  lambda c: no.antisymmetry_residual(S(c))),
        check("noether.spin_tensor_rest", "S^{rs}(0) = Sigma^{rs}",
              float(np.max(np.abs(no.spin_tensor(rest) - dr.dirac_basis().sigma_tensor))), tol(1e-12)),
        aggregate("noether.gordon", "ubar gamma^mu u' = 2 p^mu / m delta", tol(1e-10), samples,
                  lambda c: no.gordon_residual(get(c))),
        aggregate("noether.spin_current_rotation", "ubar [S^{ij}(p), gamma.p] u' = 0", tol(1e-9), samples,
                  lambda c: no.conservation_elements(get(c))["rotation"]),
        aggregate("noether.spin_current_boost_violation", "max |ubar [S^{0i}(p), gamma.p] u'| > 1e-3 at |p| >= m/2",
                  1e-3, fast, lambda c: no.conservation_elements(get(c))["boost"], bound=LOWER),
        aggregate("noether.spin_current_boost_u_v", "max |ubar [S^{0i}(p), gamma.p] v| (positive/negative energy)",
                  1e-3, fast, lambda c: no.conservation_elements(get(c), right="v")["boost"], bound=LOWER,
                  info=True),
        aggregate("noether.charge_density_ratio", "u^dag S^{12} u / u^dag u = l", tol(1e-10), samples,
                  lambda c: max(abs(no.conserved_charges(get(c)).density_ratio[l] - l) for l in dr.LAMBDAS)),
        aggregate("noether.charge_time_derivative", "u^dag i[H, S^{ij}] u' = 0", tol(1e-10), samples,
                  lambda c: no.conserved_charges(get(c)).time_derivative),
        aggregate("noether.canonical_vs_decomposed", "canonical = orbital + spin angular-momentum integrand",
                  tol(1e-9), samples, lambda c: no.canonical_vs_decomposed_residual(get(c))),
        aggregate("noether.canonical_vs_decomposed_position_first",
                  "same identity with M^i placed left of gamma^mu (rejected ordering)", tol(1e-9), samples,
                  lambda c: no.canonical_vs_decomposed_residual(get(c), order="position_first"),
                  info=True),
    ]
    return out


SUITE_FUNCS = {
    "algebra": algebra_suite,
    "little-group": little_group_suite,
    "derivation": derivation_suite,
    "dirac": dirac_suite,
    "parity": parity_suite,
    "dynamics": dynamics_suite,
    "noether": noether_suite,
}
assert tuple(SUITE_FUNCS) == SUITES


def run_suite(name: str, cfg: RunConfig) -> VerificationReport:
    if name == "all":
        checks = [c for n in SUITES for c in SUITE_FUNCS[n](cfg)]
    elif name in SUITE_FUNCS:
        checks = SUITE_FUNCS[name](cfg)
    else:
        raise KeyError(f"unknown suite {name!r}; expected one of {('all',) + SUITES}")
    return VerificationReport(name, checks).sorted()
