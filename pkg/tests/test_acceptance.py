"""Acceptance gate: eleven numbered criteria, one test (and one line) each.

Run with  pytest tests/test_acceptance.py -v  for the per-criterion verdicts;
add -s to see the quantified summary lines.  Two checks are expected to fail
red — the reasons are physical, quantified in the failure messages, and
documented in the project notes:

* criterion 4: at ten cells the edge-pair splitting crosses the 0.05
  zero-mode window at t1 ~ 0.905, before the bulk phase boundary at
  t1 = 0.98, so seven scan points in [0.91, 0.97] count zero (not two)
  near-zero branches.
* criterion 6b: the dissipation that maximizes the edge negativity sits
  near 1.5 x (2 delta).  Matching kappa = 2 delta is exact for the edge
  squeezing-correlation optimum (part a verifies the two-mode analogue to
  0.01%), but the negativity optimum is structurally higher: already the
  single-cell closed form puts it at 1.58 x (2 t1').
"""
import math
import time
import warnings

import numpy as np
import pytest
from scipy import ndimage
from scipy.optimize import brentq, minimize_scalar

from bosonchain.bands import band_edges, beta_roots
from bosonchain.chain import (ChainParams, SqueezeTransform,
                              build_coupling_matrix, effective_couplings,
                              squeeze_transform)
from bosonchain.entanglement import pair_report
from bosonchain.langevin import (exact_sums, topo_approx,
                                 two_mode_closed_form)
from bosonchain.spectra import bdg_eigenvalues, edge_modes, ssh_eigendecomposition
from bosonchain.steady import (change_frame, physicality_margin,
                               steady_moments, steady_residual,
                               to_quadrature_covariance)
from bosonchain.sweep import preset, resolve_point, run_sweep

from conftest import assert_multiset_close, random_analytic_params, random_stable_params

warnings.filterwarnings("ignore", category=RuntimeWarning)

CHAIN = ChainParams(t1=1.0, delta1=0.6, q_t=4.0, q_delta=4.0,
                    n_cells=5, kappa=0.01)          # the workhorse N=5 chain


def _two_mode_draw(rng):
    t1 = rng.uniform(0.2, 2.0)
    delta1 = rng.uniform(-0.95, 0.95) * t1
    kappa = 10.0 ** rng.uniform(-3, 1)
    return ChainParams(t1=t1, delta1=delta1, q_t=1.0, q_delta=0.0,
                       n_cells=1, kappa=kappa)


def _squeezed_steady(params):
    return change_frame(steady_moments(params), squeeze_transform(params),
                        "squeezed")


def _edge_en(params):
    return pair_report(steady_moments(params), 1, params.n_modes).E_N


def test_criterion_01_two_mode_closed_form():
    t0 = time.perf_counter()
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(200):
        p = _two_mode_draw(rng)
        tm = two_mode_closed_form(p)
        st = _squeezed_steady(p)
        dev = max(np.max(np.abs(st.F - tm.F_tilde)),
                  np.max(np.abs(st.G - tm.G_tilde)))
        worst = max(worst, dev)
    dt = time.perf_counter() - t0
    print(f"[criterion 1] PASS — closed form vs exact steady state: "
          f"worst entrywise deviation {worst:.2e} over 200 draws ({dt:.2f}s)")
    assert worst < 1e-10
    assert dt < 1.0


def test_criterion_02_exact_sums_equal_steady_state():
    t0 = time.perf_counter()
    rng = np.random.default_rng(202)
    worst = 0.0
    for _ in range(50):
        p = random_analytic_params(rng, n_cells=int(rng.integers(2, 7)),
                                   kappa=float(10.0 ** rng.uniform(-3, 1)))
        ex = exact_sums(p)
        st = _squeezed_steady(p)
        dev = max(np.max(np.abs(st.F - ex.F_tilde)),
                  np.max(np.abs(st.G - ex.G_tilde)))
        worst = max(worst, dev)
    dt = time.perf_counter() - t0
    print(f"[criterion 2] PASS — stationary sums vs exact steady state: "
          f"worst entrywise deviation {worst:.2e} over 50 draws ({dt:.2f}s)")
    assert worst < 1e-8
    assert dt < 10.0


def test_criterion_03_phase_entanglement_correspondence():
    t0 = time.perf_counter()
    res = run_sweep(preset("fig1"))
    assert res.shape == (41, 41)
    en = res.numeric("E_N_edge").ravel()
    phase = res.values["phase"]
    stable = res.values["stable"]
    triv = np.array([(ph == "Trivial") and (s is True)
                     for ph, s in zip(phase, stable)])
    assert triv.any()
    worst_triv = float(np.max(en[triv]))
    mask = (en > 1e-6).reshape(res.shape)
    labels, n_comp = ndimage.label(mask)
    outside = int(np.sum(mask.ravel() & (phase != "Topological")))
    dt = time.perf_counter() - t0
    print(f"[criterion 3] PASS — {int(triv.sum())} stable trivial points with "
          f"E_N <= {worst_triv:.1e}; {int(mask.sum())} entangled points form "
          f"{n_comp} region(s), {outside} outside the topological phase ({dt:.1f}s)")
    assert worst_triv < 1e-9, \
        f"entanglement in the trivial phase: max E_N = {worst_triv:.3e}"
    assert mask.sum() > 0 and n_comp == 1, \
        f"E_N > 1e-6 region should be one contiguous patch, got {n_comp}"
    assert outside == 0, \
        f"{outside} points with E_N > 1e-6 lie outside the topological phase"
    assert dt < 120.0


def test_criterion_04_edge_mode_spectra_window():
    t0 = time.perf_counter()
    base = ChainParams.from_absolute(t1=1.0, delta1=0.6, t2=0.8, delta2=0.0,
                                     n_cells=10, kappa=0.01)
    bad_count, bad_im = [], []
    for t1 in np.linspace(0.65, 1.4, 76):
        p = resolve_point(base, {"t1_abs": float(t1)})
        lam = ssh_eigendecomposition(build_coupling_matrix(p)).lambdas
        n_small = int(np.sum(np.abs(lam) < 0.05))
        delta = float(lam[p.n_cells])
        if t1 < 0.98 and n_small != 2:
            bad_count.append((round(float(t1), 4), n_small, round(delta, 4)))
        if t1 > 1.02 and n_small != 0:
            bad_count.append((round(float(t1), 4), n_small, round(delta, 4)))
        im_max = float(np.max(np.abs(bdg_eigenvalues(p).imag)))
        if t1 / 0.6 > 1 and im_max > 1e-8:
            bad_im.append((round(float(t1), 4), im_max))
    dt = time.perf_counter() - t0
    assert dt < 5.0
    assert not bad_im, f"complex energies in the stable regime: {bad_im}"
    verdict = "PASS" if not bad_count else "FAIL"
    print(f"[criterion 4] {verdict} — zero-mode count correct at "
          f"{76 - len(bad_count)}/76 scan points; all energies real to 1e-8 "
          f"({dt:.2f}s)")
    assert not bad_count, (
        "the |energy| < 0.05 window undercounts near the transition: at ten "
        "cells the edge-pair splitting delta(t1) crosses 0.05 at t1 ~ 0.905, "
        "before the bulk phase boundary at t1 = 0.98, so these (t1, count, "
        f"delta) points report zero instead of two near-zero branches: {bad_count}")


def test_criterion_05_analytic_tracks_exact_negativity():
    t0 = time.perf_counter()
    rels = []
    for d in np.linspace(0.2, 0.7, 9):
        p = resolve_point(CHAIN, {"delta_over_t": float(d)})
        e_exact = _edge_en(p)
        e_approx = pair_report(topo_approx(p).as_moment_state(),
                               1, p.n_modes).E_N
        rels.append(abs(e_approx - e_exact) / e_exact)
    dt = time.perf_counter() - t0
    print(f"[criterion 5] PASS — resonant approximation vs exact negativity: "
          f"max relative deviation {max(rels):.2e} over 9 points ({dt:.2f}s)")
    assert max(rels) < 0.05
    assert dt < 5.0


def test_criterion_06a_two_mode_correlation_optimum():
    t0 = time.perf_counter()
    rng = np.random.default_rng(606)
    worst = 0.0
    for _ in range(5):
        p = _two_mode_draw(rng)
        tp = effective_couplings(p)[0]

        def neg_corr(k, p=p):
            return -abs(two_mode_closed_form(p.replace(kappa=float(k)))
                        .G_tilde[0, 1])

        res = minimize_scalar(neg_corr, bounds=(1e-4 * tp, 1e3 * tp),
                              method="bounded", options={"xatol": 1e-9 * tp})
        worst = max(worst, abs(res.x - 2 * tp) / (2 * tp))
    dt = time.perf_counter() - t0
    print(f"[criterion 6a] PASS — cross-correlation optimum at kappa = 2 t1' "
          f"to {worst:.2e} relative over 5 draws ({dt:.2f}s)")
    assert worst < 0.01
    assert dt < 30.0


def test_criterion_06b_chain_negativity_optimum():
    t0 = time.perf_counter()
    lam = ssh_eigendecomposition(build_coupling_matrix(CHAIN)).lambdas
    two_delta = float(lam[CHAIN.n_cells] - lam[CHAIN.n_cells - 1])

    def en(k):
        return _edge_en(CHAIN.replace(kappa=float(k)))

    ks = np.geomspace(1e-4, 0.3, 45)
    es = [en(k) for k in ks]
    i = int(np.argmax(es))
    res = minimize_scalar(lambda k: -en(k),
                          bounds=(ks[max(0, i - 1)], ks[min(len(ks) - 1, i + 1)]),
                          method="bounded", options={"xatol": 1e-7})
    k_star = float(res.x)
    rel = abs(k_star - two_delta) / two_delta
    dt = time.perf_counter() - t0
    assert dt < 30.0
    verdict = "PASS" if rel <= 0.25 else "FAIL"
    print(f"[criterion 6b] {verdict} — negativity optimum kappa* = {k_star:.5f} "
          f"vs 2 delta = {two_delta:.5f} ({rel:.1%} off) ({dt:.2f}s)")
    assert rel <= 0.25, (
        f"the negativity optimum kappa* = {k_star:.5f} sits {rel:.0%} above "
        f"2 delta = {two_delta:.5f}: matching kappa = 2 delta maximizes the "
        "edge squeezing correlation (part a), but the negativity optimum is "
        "structurally higher — already the single-cell closed form puts it "
        "at 1.58 x (2 t1'), and the edge-window approximation of this chain "
        "reproduces the same ~1.5x offset, so a 25% window cannot hold")


def test_criterion_07_thermal_decay_is_linear():
    t0 = time.perf_counter()
    res = run_sweep(preset("fig5c"))
    n_th = res.axis_values[0]
    en = res.numeric("E_N_edge")
    fit = en > 1e-4
    assert fit.sum() >= 5
    slope, icpt = np.polyfit(n_th[fit], en[fit], 1)
    pred = slope * n_th[fit] + icpt
    r2 = 1.0 - np.sum((en[fit] - pred) ** 2) / np.sum((en[fit] - en[fit].mean()) ** 2)
    dies = (en == 0.0) & (n_th > 0)
    dt = time.perf_counter() - t0
    print(f"[criterion 7] PASS — E_N(n_th) linear with R^2 = {r2:.5f} "
          f"(slope {slope:.3f}), vanishing from n_th = "
          f"{float(n_th[dies][0]) if dies.any() else float('nan'):.3f} ({dt:.1f}s)")
    assert r2 > 0.99
    assert slope < 0
    assert dies.any(), "E_N should hit zero at finite thermal occupation"
    assert dt < 10.0


def test_criterion_08_dark_line_suppression():
    t0 = time.perf_counter()

    def at(x, c):
        return resolve_point(CHAIN, {"delta1_over_t1": float(x),
                                     "delta2_over_t2": float(c)})

    def balance(x, c):
        p = at(x, c)
        sq = squeeze_transform(p)
        ed = edge_modes(p)
        return math.exp(-2 * sq.r_0) * ed.L1 - math.exp(2 * sq.r_0) * ed.L2

    checked = []
    for c in (0.45, 0.55, 0.65, 0.75, 0.85):
        xs = np.linspace(0.05, 0.97, 30)
        vals = [balance(x, c) for x in xs]
        brackets = [(xs[i], xs[i + 1]) for i in range(len(xs) - 1)
                    if np.sign(vals[i]) != np.sign(vals[i + 1])]
        if not brackets:
            continue
        x_star = brentq(lambda x: balance(x, c), *brackets[0], xtol=1e-12)
        e_dark = _edge_en(at(x_star, c))
        col_max = max(_edge_en(at(x, c)) for x in np.linspace(0.05, 0.97, 25))
        checked.append((c, x_star, e_dark, col_max))
    dt = time.perf_counter() - t0
    assert len(checked) >= 3, "the balance locus should cross several columns"
    worst = max(e / m for (_, _, e, m) in checked)
    print(f"[criterion 8] PASS — E_N on the balance locus at most {worst:.1%} "
          f"of the column maximum across {len(checked)} columns ({dt:.1f}s)")
    for c, x_star, e_dark, col_max in checked:
        assert e_dark < 0.10 * col_max, (
            f"column Delta2/t2 = {c}: E_N = {e_dark:.3e} at the balance point "
            f"x* = {x_star:.4f} is not far below the column max {col_max:.3e}")
    assert dt < 30.0


def test_criterion_09_non_bloch_invariants():
    t0 = time.perf_counter()
    rng = np.random.default_rng(909)
    worst_closure, worst_pairing, worst_band = 0.0, 0.0, 0.0
    for _ in range(100):
        p = random_stable_params(rng, real=True)
        lo, hi = band_edges(p)
        for f in (0.2, 0.5, 0.8):
            br = beta_roots(p, lo + f * (hi - lo))
            roots = np.array(br.roots)
            assert_multiset_close(roots, 1.0 / roots, tol=1e-10)
            for a, b in br.pairs:
                worst_pairing = max(worst_pairing, abs(abs(a) - abs(b)))
        lam = np.linalg.eigvalsh(build_coupling_matrix(p.replace(n_cells=20)))
        bulk = np.sort(np.abs(lam))[2:]          # all but the two edge values
        xi2 = bulk ** 2
        worst_band = max(worst_band,
                         float(np.max(np.maximum(lo - xi2, xi2 - hi))))
    dt = time.perf_counter() - t0
    print(f"[criterion 9] PASS — reciprocal closure and equal-modulus pairing "
          f"to {worst_pairing:.1e}; bulk levels inside the band to "
          f"{worst_band:.1e} over 100 draws ({dt:.1f}s)")
    assert worst_pairing < 1e-10
    assert worst_band < 1e-6
    assert dt < 30.0


def test_criterion_10_gaussian_physicality_suite():
    rng = np.random.default_rng(101)
    pool = [_two_mode_draw(rng) for _ in range(200)]
    rng = np.random.default_rng(202)
    for _ in range(50):
        pool.append(random_analytic_params(rng, n_cells=int(rng.integers(2, 7)),
                                           kappa=float(10.0 ** rng.uniform(-3, 1))))
    pool += [resolve_point(CHAIN, {"delta_over_t": float(d)})
             for d in np.linspace(0.2, 0.7, 9)]
    fig1 = preset("fig1")
    for q in fig1.axes[0].grid()[::4]:
        for d in fig1.axes[1].grid()[::4]:
            pool.append(resolve_point(fig1.base, {"t2_over_t1": float(q),
                                                  "delta_over_t": float(d)}))
    for phi in np.linspace(0, 2 * np.pi, 81)[::8]:
        pool.append(CHAIN.replace(phi_t=float(phi)))
        pool.append(CHAIN.replace(phi_delta=float(phi)))

    check_rng = np.random.default_rng(1010)
    n_states, worst_margin, worst_res, worst_inv = 0, 0.0, 0.0, 0.0
    for p in pool:
        try:
            state = steady_moments(p)
        except Exception:
            continue          # unstable draws are outside the suite's scope
        n_states += 1
        margin = physicality_margin(to_quadrature_covariance(state))
        assert margin > -1e-10, f"unphysical covariance ({margin:.2e}) at {p}"
        worst_margin = min(worst_margin, margin)
        res = steady_residual(p, state)
        bound = 1e-10 * p.kappa * (1.0 + np.linalg.norm(state.F))
        assert res < bound, f"moment-flow residual {res:.2e} > {bound:.2e} at {p}"
        worst_res = max(worst_res, res / bound)
        e0 = pair_report(state, 1, p.n_modes).E_N
        r = check_rng.uniform(-0.3, 0.3, size=p.n_modes)
        twisted = change_frame(state, SqueezeTransform(0.0, 0.0, 0.0, r),
                               "squeezed")
        e1 = pair_report(twisted, 1, p.n_modes).E_N
        assert abs(e1 - e0) < 1e-10, \
            f"E_N changed under local squeezing: {e0!r} -> {e1!r} at {p}"
        worst_inv = max(worst_inv, abs(e1 - e0))
    print(f"[criterion 10] PASS — {n_states} steady states: physicality margin "
          f">= {worst_margin:.1e}, residual <= {worst_res:.1e} of bound, "
          f"negativity shift under local squeezing <= {worst_inv:.1e}")
    assert n_states > 300


def test_criterion_11_complex_phase_scans():
    t0 = time.perf_counter()
    res_t = run_sweep(preset("fig6a"))
    res_d = run_sweep(preset("fig6b"))
    assert res_t.spec.engine == "exact" and res_d.spec.engine == "exact"
    assert res_t.n_points == 81 and res_d.n_points == 81
    assert all(s == "ok" for s in res_t.status)
    assert all(s == "ok" for s in res_d.status)
    grid = res_d.axis_values[0]
    en = res_d.numeric("E_N_edge")
    i_pi = int(np.argmin(np.abs(grid - np.pi)))
    assert abs(grid[i_pi] - np.pi) < 1e-12
    dt = time.perf_counter() - t0
    print(f"[criterion 11] PASS — both 81-point phase scans complete; "
          f"E_N({{phi_delta=pi}}) = {en[i_pi]:.1e}, E_N(phi_delta=0) = "
          f"{en[0]:.4f} ({dt:.1f}s)")
    assert en[i_pi] < 1e-12, "opposite-phase squeezing should kill the negativity"
    assert en[0] > 1e-3
    assert dt < 60.0
