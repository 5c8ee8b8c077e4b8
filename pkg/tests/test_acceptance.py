"""Acceptance gate: one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or ``pytest tests/test_acceptance.py -s`` to see them
inline.
"""
import cmath
import math
import time

import numpy as np
import pytest

from fracqm import fracops, freeparticle, well
from fracqm.quadrature import PVProblem, pv_integrate
from fracqm.specfun import foxh
from fracqm.specfun.mittag_leffler import (SERIES_PEAK_LIMIT, mittag_leffler, ml_by_contour,
                                           ml_by_series)
from fracqm.validation import run_suite


def test_c01_pv_oracle(acceptance):
    prob = PVProblem(lambda q: np.ones_like(q), (-1.0, 1.0), ((1.0, 1.0, "cos"),), -2.0)
    t0 = time.perf_counter()
    r = pv_integrate(prob, 1e-11)
    dt = time.perf_counter() - t0
    exact = -math.pi * math.sin(1.0)
    rel = abs(r.value - exact) / abs(exact)
    ok = acceptance.record("1 pv oracle", rel <= 1e-8 and dt < 1.0,
                           f"value {r.value.real:.12f}, rel err {rel:.2e} (<= 1e-8), {dt:.3f}s (< 1s)")
    assert ok


def test_c02_alpha_zero_diagnostic(acceptance):
    spec = well.WellSpec(a=1.0, beta=1.5)
    xs = np.linspace(-0.95, 0.95, 21)
    t0 = time.perf_counter()
    rep = well.consistency_experiment(spec, 1, 0.0, xs, tol=1e-9)
    dt = time.perf_counter() - t0
    err = max(abs(r.pv_re - (-math.pi * math.cos(math.pi * r.x / 2))) for r in rep.rows)
    ok = acceptance.record("2 alpha=0 diagnostic", err <= 1e-6 and dt < 10 and rep.all_converged,
                           f"21 points, max abs err {err:.2e} (<= 1e-6), {dt:.2f}s (< 10s)")
    assert ok


def test_c03_consistency_experiment(acceptance, tmp_path):
    spec = well.WellSpec(a=1.0, beta=1.5)
    rep = well.ConsistencyReport(spec, tol=1e-9)
    xs = np.linspace(-0.9, 0.9, 11)
    for alpha in (1.2, 1.5, 1.8):
        for n in (1, 2, 3):
            well.consistency_experiment(spec, n, alpha, xs, tol=1e-9, report=rep)
    text = rep.to_csv(tmp_path / "consistency.csv")
    header = text.splitlines()[0].split(",")
    emitted = len(text.splitlines()) == 100 and {"pv_re", "closed_form", "recovered_psi",
                                                 "residual"} <= set(header)
    sc, im, par = rep.max_self_convergence(), rep.max_imag(), rep.parity_defect()
    ok = (rep.all_converged and emitted and sc <= 1e-7 and im <= 1e-7 and par <= 1e-7)
    acceptance.record("3 consistency experiment", ok,
                      f"99 rows, self-convergence {sc:.1e}, imag {im:.1e}, parity {par:.1e} "
                      f"(all <= 1e-7); measured max |recovered - psi| = {rep.max_residual():.3f} "
                      "(reported, not asserted)")
    assert ok


def test_c04_mittag_leffler(acceptance):
    xs = np.linspace(-5, 5, 20)
    e1 = max(abs(mittag_leffler(1.0, x).value - math.exp(x)) for x in xs)
    cont = 0.0
    for a in (0.25, 0.5, 0.999, 1.0, 1.5, 1.95):
        for z in (-3.0, -0.5, 0.8, 2j, -1 + 4j):
            e0 = mittag_leffler(a, z).value
            cont = max(cont, abs(mittag_leffler(a + 1e-6, z).value - e0) / max(1.0, abs(e0)))
    overlap, used = 0.0, 0
    for a in (0.4, 0.6, 0.9, 1.3, 1.8):
        for r in np.linspace(2.0, 5.0, 4):
            for th in np.linspace(-math.pi, math.pi, 12, endpoint=False):
                z = r * cmath.exp(1j * th)
                s = ml_by_series(a, z)
                if s.diagnostics["peak_term"] > SERIES_PEAK_LIMIT:
                    continue
                c = ml_by_contour(a, z)
                used += 1
                overlap = max(overlap, abs(s.value - c.value) / max(1.0, abs(c.value)))
    ok = e1 <= 1e-10 and cont <= 1e-4 and overlap <= 1e-8 and used > 50
    acceptance.record("4 mittag-leffler", ok,
                      f"|E_1 - exp| {e1:.1e} (<= 1e-10), continuity {cont:.1e} (<= 1e-4), "
                      f"series/contour {overlap:.1e} on {used} annulus points (<= 1e-8)")
    assert ok


def test_c05_fox_h(acceptance):
    rng = np.random.default_rng(20)
    gap = 0.0
    for _ in range(10):
        a = rng.uniform(0.3, 1.9)
        z = rng.uniform(0.1, 5.0)
        h = freeparticle.cosine_kernel_params(a)
        gap = max(gap, abs(foxh.foxh_eval(h, z).value - mittag_leffler(a, -z).value))
    e = foxh.FoxHParams(1, 0, (), [(0, 1)])
    eg = max(abs(foxh.foxh_eval(e, z).value - cmath.exp(-z)) for z in (0.1, 0.5, 1.0, 3.0, 2 - 1j))
    # L{e^-x}(s) = 1/(s+1), L{x e^-x}(s) = 1/(s+1)^2
    lap = foxh.foxh_laplace(e, 1, 1)
    lap2 = foxh.foxh_laplace(e.with_meta(pf_power=1.0), 2, 1)
    tr = max(max(abs(foxh.foxh_value(lap, s).value - 1 / (s + 1)),
                 abs(foxh.foxh_value(lap2, s).value - 1 / (s + 1) ** 2)) for s in (0.5, 2.0, 5.0))
    inv = foxh.foxh_inverse_laplace(lap, 1, 1)
    tr = max(tr, max(abs(foxh.foxh_value(inv, x).value - math.exp(-x)) for x in (0.3, 1.0, 2.5)))
    c = 1.3
    d = foxh.foxh_rl_derivative(e, 1.0, 1.0, 1.0, c)
    tr = max(tr, max(abs(foxh.foxh_value(d, z).value - math.exp(-c * z) * (1 - c * z))
                     for z in (0.2, 1.0, 3.0)))
    ok = gap <= 1e-8 and eg <= 1e-10 and tr <= 1e-6
    acceptance.record("5 fox h", ok,
                      f"ML identity {gap:.1e} (<= 1e-8), exp {eg:.1e} (<= 1e-10), "
                      f"transform pairs {tr:.1e} (<= 1e-6)")
    assert ok


def _gauss(x, t, D1):
    return cmath.exp(-x * x / (4j * D1 * t)) / cmath.sqrt(4j * math.pi * D1 * t)


def test_c06_free_particle_gaussian(acceptance):
    p = freeparticle.FracParams(1.0, 2.0, 0.5, 1.0, 1.0)
    gap = 0.0
    for x, t in [(0.5, 1.0), (1.0, 0.5), (2.0, 2.0), (3.0, 1.5), (0.25, 0.3)]:
        g = _gauss(x, t, 0.5)
        gap = max(gap, abs(freeparticle.psi_integral(p, x, t).value - g),
                  abs(freeparticle.psi_foxh(p, x, t).value - g))
    phase = 0.0
    for t in (0.4, 1.0, 3.0):
        v0 = freeparticle.psi_integral(p, 0.0, t).value
        for x in (0.3, 1.0, 2.5):
            phase = max(phase, abs(abs(freeparticle.psi_integral(p, x, t).value / v0) - 1))
    ok = gap <= 1e-6 and phase <= 1e-10
    acceptance.record("6 free particle gaussian", ok,
                      f"max gap to Gaussian {gap:.1e} (<= 1e-6), |Psi(x)/Psi(0)| - 1 {phase:.1e} (<= 1e-10)")
    assert ok


def test_c07_free_particle_fractional(acceptance):
    worst, rows = 0.0, []
    for a in (0.6, 0.8, 1.0):
        for b in (1.4, 1.7, 2.0):
            p = freeparticle.FracParams(a, b, 0.5, 1.0, 1.0)
            s1 = freeparticle.psi_integral(p, 1.0, 1.0)
            s2 = freeparticle.psi_foxh(p, 1.0, 1.0)
            allowed = max(1e-4, 10 * (s1.err + s2.err))
            worst = max(worst, abs(s1.value - s2.value) / allowed)
            rows.append(abs(s1.value - s2.value))
    mutual = 0.0
    for a in (0.5, 0.75):
        vals = [s.value for s in freeparticle.psi_time_fractional(
            freeparticle.FracParams(a, 2.0, 0.5, 1.0, 1.0), 1.0, 1.0)]
        mutual = max(mutual, max(abs(u - v) for u in vals for v in vals))
    ratios = []
    for b in (1.2, 1.5, 1.8):
        ratios += freeparticle.space_form_ratio(freeparticle.FracParams(1.0, b, 0.5, 1.0, 1.0),
                                                [(1.0, 1.0), (0.5, 2.0)])
    rmean = np.mean(ratios)
    rspread = max(abs(r - rmean) for r in ratios)
    ok = worst <= 1 and mutual <= 1e-5
    acceptance.record("7 free particle fractional", ok,
                      f"3x3 grid max gap {max(rows):.1e} (bound max(1e-4, 10x est.)), "
                      f"beta=2 forms mutual {mutual:.1e} (<= 1e-5); space-form ratio measured "
                      f"{rmean.real:.15f}{rmean.imag:+.1e}i, spread {rspread:.1e} "
                      f"(1/pi = {1 / math.pi:.15f})")
    assert ok


def test_c08_effective_potential(acceptance):
    spec = well.WellSpec(a=1.0, beta=1.5, D_beta=1.0, hbar=1.0, mass=1.0)
    v = well.effective_potential_well(spec, 1)
    st = well.eigenstate(spec, 1, form="sin_shifted")
    X = fracops.GridFunction.sample(st, -1.0, 1.0, 2001)
    prof = well.effective_potential_general(X, st.energy, spec)
    grid = float(np.max(np.abs(prof.interior() - v)))
    null = 0.0
    for m in (0.5, 1.0, 3.0):
        s2 = well.WellSpec(a=1.3, beta=2.0, D_beta=1 / (2 * m), hbar=1.0, mass=m)
        null = max(null, max(abs(well.effective_potential_well(s2, n)) for n in range(1, 6)))
    ok = abs(v - 0.73500) <= 1e-5 and grid <= 1e-4 and null <= 1e-12
    acceptance.record("8 effective potential", ok,
                      f"V = {v:.8f} (0.73500 +- 1e-5), grid deviation {grid:.1e} (<= 1e-4), "
                      f"beta=2 null {null:.1e}")
    assert ok


def test_c09_fractional_operators(acceptance):
    g = fracops.GridFunction.sample(lambda x: np.exp(-x * x / 2) * np.cos(x), -12.0, 12.0, 1201)
    x = g.x
    d2 = np.exp(-x * x / 2) * ((x * x - 2) * np.cos(x) + 2 * x * np.sin(x))
    riesz = float(np.max(np.abs(fracops.riesz_apply_grid(g, 2.0).samples - d2)))
    lin = fracops.GridFunction.sample(lambda t: t, 0.0, 1.0, 10001)
    cap = abs(fracops.caputo_derivative(lin, 0.5, 1.0).value - 2 / math.sqrt(math.pi))
    order, _ = fracops.l1_convergence_order(lambda t: t * t, 2 / math.gamma(2.5), 0.5)
    cases = [(np.ones_like, 0.5, 2.0), (lambda t: t, 0.5, 2.0), (lambda t: np.exp(-t), 0.3, 1 + 1j),
             (lambda t: np.sin(t), 0.7, 1.5)]
    lap = max(fracops.caputo_laplace_check(fracops.GridFunction.sample(f, 0.0, 40.0, 40001), q, s)
              for f, q, s in cases)
    ok = riesz <= 1e-6 and cap <= 1e-4 and abs(order - 1.5) <= 0.2 and lap <= 1e-3
    acceptance.record("9 fractional operators", ok,
                      f"Riesz q=2 {riesz:.1e} (<= 1e-6), Caputo(t) {cap:.1e} (<= 1e-4), "
                      f"L1 order {order:.3f} (1.5 +- 0.2), Laplace residual {lap:.1e} (<= 1e-3)")
    assert ok


@pytest.mark.slow
def test_c10_validate_suite(acceptance):
    t0 = time.perf_counter()
    results = run_suite()
    dt = time.perf_counter() - t0
    failed = [r.name for r in results if not r.passed]
    ok = not failed and dt < 300
    acceptance.record("10 validate_suite", ok,
                      f"{len(results)} checks, {len(failed)} failed {failed or ''}, {dt:.1f}s (< 300s)")
    assert ok
