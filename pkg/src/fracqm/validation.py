"""Self-check suite: known values and cross-method identities.

Each check returns a :class:`CheckResult`; :func:`run_suite` runs them all.
Only closed forms and internal cross-checks serve as references, so the
suite needs nothing beyond the runtime dependencies.
"""
from __future__ import annotations

import cmath
import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import fracops, freeparticle, quadrature, well
from .specfun import foxh
from .specfun.mittag_leffler import (SERIES_PEAK_LIMIT, mittag_leffler, ml_by_contour,
                                     ml_by_series)
from .specfun.gamma import gamma_complex


@dataclass
class CheckResult:
    name: str
    passed: bool
    measured: float
    threshold: float
    seconds: float = 0.0
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return (f"{tag} {self.name}: measured {self.measured:.3e} "
                f"(threshold {self.threshold:.1e}, {self.seconds:.2f}s)")

    def to_dict(self):
        return asdict(self)


def _timed(fn):
    def run():
        t0 = time.perf_counter()
        res = fn()
        res.seconds = time.perf_counter() - t0
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def check_pv_oracle():
    """PV int cos(q)/(q^2-1) dq = -pi sin 1."""
    p = quadrature.PVProblem(lambda q: np.ones_like(q), (-1.0, 1.0), ((1.0, 1.0, "cos"),), -2.0)
    t0 = time.perf_counter()
    r = quadrature.pv_integrate(p, 1e-11)
    dt = time.perf_counter() - t0
    exact = -math.pi * math.sin(1.0)
    rel = abs(r.value - exact) / abs(exact)
    return CheckResult("pv_oracle", rel <= 1e-8 and dt < 1.0, rel, 1e-8,
                       details={"value": r.value.real, "runtime": dt})


@_timed
def check_alpha0_diagnostic():
    """alpha = 0 recovery integral equals -pi cos(pi x / 2a) on 21 points."""
    spec = well.WellSpec(a=1.0, beta=1.5)
    xs = np.linspace(-0.95, 0.95, 21)
    rep = well.consistency_experiment(spec, 1, 0.0, xs, tol=1e-9, check_refinement=False)
    err = max(abs(r.pv_re - r.closed_form) for r in rep.rows)
    return CheckResult("alpha0_diagnostic", err <= 1e-6 and rep.all_converged, err, 1e-6)


@_timed
def check_consistency_experiment():
    """Self-convergence, parity and realness for alpha x n x 11 points."""
    spec = well.WellSpec(a=1.0, beta=1.5)
    rep = well.ConsistencyReport(spec, tol=1e-9)
    xs = np.linspace(-0.9, 0.9, 11)
    for alpha in (1.2, 1.5, 1.8):
        for n in (1, 2, 3):
            well.consistency_experiment(spec, n, alpha, xs, tol=1e-9, report=rep)
    worst = max(rep.max_self_convergence(), rep.max_imag(), rep.parity_defect())
    ok = rep.all_converged and worst <= 1e-7 and len(rep.rows) == 99
    return CheckResult("consistency_experiment", ok, worst, 1e-7,
                       details={"rows": len(rep.rows),
                                "max_residual_vs_closed_form": rep.max_residual()})


@_timed
def check_mittag_leffler():
    """E_1 = exp, continuity in alpha, series/contour agreement where both apply."""
    xs = np.linspace(-5, 5, 20)
    e1 = max(abs(mittag_leffler(1.0, x).value - math.exp(x)) / max(1.0, math.exp(x))
             for x in xs)
    cont = 0.0
    for a in (0.3, 0.75, 1.2, 1.9):
        for z in (-2.0, 1.5, 3j, -4 + 1j):
            e0 = mittag_leffler(a, z).value
            d = mittag_leffler(a + 1e-6, z).value - e0
            cont = max(cont, abs(d) / max(1.0, abs(e0)))
    overlap = 0.0
    for a in (0.5, 0.8, 1.2, 1.7):
        for r in (2.0, 3.0, 4.0, 5.0):
            for th in np.linspace(-math.pi, math.pi, 8, endpoint=False):
                z = r * cmath.exp(1j * th)
                s = ml_by_series(a, z)
                if s.diagnostics["peak_term"] > SERIES_PEAK_LIMIT:
                    continue
                c = ml_by_contour(a, z)
                overlap = max(overlap, abs(s.value - c.value) / max(1.0, abs(c.value)))
    worst = max(e1 / 1e-10, cont / 1e-4, overlap / 1e-8)
    return CheckResult("mittag_leffler", worst <= 1, worst, 1.0,
                       details={"exp_identity": e1, "continuity": cont, "overlap": overlap})


@_timed
def check_fox_h():
    """Mittag-Leffler identity, exponential reduction and transform pairs."""
    ml_gap = 0.0
    for a, z in [(0.75, 0.3), (0.75, 1.0), (0.75, 2.5), (0.5, 1.5), (0.9, 4.0),
                 (1.3, 0.8), (1.6, 2.0), (0.3, 0.7), (1.0, 3.3), (1.9, 1.1)]:
        h = freeparticle.cosine_kernel_params(a)
        ml_gap = max(ml_gap, abs(foxh.foxh_eval(h, z).value - mittag_leffler(a, -z).value))
    e = foxh.FoxHParams(1, 0, (), [(0, 1)])
    exp_gap = max(abs(foxh.foxh_eval(e, z).value - cmath.exp(-z)) for z in (0.2, 1.0, 2.5, 1 + 1j))
    lap = foxh.foxh_laplace(e, 1, 1)
    tr = abs(foxh.foxh_value(lap, 2.0).value - 1 / 3)
    inv = foxh.foxh_inverse_laplace(
        foxh.FoxHParams(1, 1, [(0, 1)], [(0, 1)], power=-1.0, pf_power=-1.0), 1, 1)
    tr = max(tr, max(abs(foxh.foxh_value(inv, x).value - math.exp(-x)) for x in (0.5, 1.0, 2.0)))
    c = 0.7
    d = foxh.foxh_rl_derivative(e, 1.0, 1.0, 1.0, c)
    tr = max(tr, max(abs(foxh.foxh_value(d, z).value - math.exp(-c * z) * (1 - c * z))
                     for z in (0.4, 1.0, 2.0)))
    worst = max(ml_gap / 1e-8, exp_gap / 1e-10, tr / 1e-6)
    return CheckResult("fox_h", worst <= 1, worst, 1.0,
                       details={"ml_identity": ml_gap, "exp": exp_gap, "transforms": tr})


@_timed
def check_free_particle_gaussian():
    """alpha = 1, beta = 2: both representations reproduce the Gaussian propagator."""
    p = freeparticle.FracParams(1.0, 2.0, 0.5, 1.0, 1.0)
    gap = 0.0
    for x, t in [(0.7, 1.0), (0.3, 0.5), (1.5, 2.0), (2.5, 1.0), (1.0, 0.8)]:
        g = freeparticle.gaussian_limit(x, t, 0.5)
        gap = max(gap, abs(freeparticle.psi_integral(p, x, t).value - g),
                  abs(freeparticle.psi_foxh(p, x, t).value - g))
    phase = 0.0
    for t in (0.5, 1.0, 2.0):
        v0 = freeparticle.psi_integral(p, 0.0, t).value
        for x in (0.5, 1.5, 3.0):
            phase = max(phase, abs(abs(freeparticle.psi_integral(p, x, t).value / v0) - 1))
    worst = max(gap / 1e-6, phase / 1e-10)
    return CheckResult("free_particle_gaussian", worst <= 1, worst, 1.0,
                       details={"gaussian_gap": gap, "phase_modulus": phase})


@_timed
def check_free_particle_fractional():
    """Integral vs closed form on a 3x3 grid; beta = 2 forms; space-form ratio."""
    worst = 0.0
    grid = {}
    for a in (0.6, 0.8, 1.0):
        for b in (1.4, 1.7, 2.0):
            p = freeparticle.FracParams(a, b, 0.5, 1.0, 1.0)
            s1 = freeparticle.psi_integral(p, 1.0, 1.0)
            s2 = freeparticle.psi_foxh(p, 1.0, 1.0)
            gap = abs(s1.value - s2.value)
            allowed = max(1e-4, 10 * (s1.err + s2.err))
            grid[f"{a},{b}"] = gap
            worst = max(worst, gap / allowed)
    p = freeparticle.FracParams(0.5, 2.0, 0.5, 1.0, 1.0)
    vals = [s.value for s in freeparticle.psi_time_fractional(p, 1.0, 1.0)]
    mutual = max(abs(u - v) for u in vals for v in vals)
    worst = max(worst, mutual / 1e-5)
    ratios = freeparticle.space_form_ratio(freeparticle.FracParams(1.0, 1.5, 0.5, 1.0, 1.0),
                                           [(1.0, 1.0), (0.5, 1.0), (2.0, 0.7)])
    return CheckResult("free_particle_fractional", worst <= 1, worst, 1.0,
                       details={"grid_gaps": grid, "beta2_mutual": mutual,
                                "space_form_ratio": [[r.real, r.imag] for r in ratios]})


@_timed
def check_effective_potential():
    """Constant shift, its grid reduction, and the beta = 2 null case."""
    spec = well.WellSpec(a=1.0, beta=1.5, D_beta=1.0, hbar=1.0, mass=1.0)
    v = well.effective_potential_well(spec, 1)
    e1 = abs(v - 0.73500) / 1e-5
    st = well.eigenstate(spec, 1, form="sin_shifted")
    X = fracops.GridFunction.sample(st, -1.0, 1.0, 2001)
    prof = well.effective_potential_general(X, st.energy, spec)
    e2 = np.max(np.abs(prof.interior() - v)) / 1e-4
    ordinary = well.WellSpec(a=1.0, beta=2.0, D_beta=0.5, hbar=1.0, mass=1.0)
    e3 = max(abs(well.effective_potential_well(ordinary, n)) for n in range(1, 8)) / 1e-14
    worst = max(e1, e2, e3)
    return CheckResult("effective_potential", worst <= 1, worst, 1.0,
                       details={"value": v, "grid_gap": e2 * 1e-4})


@_timed
def check_fractional_operators():
    """Riesz order 2, Caputo value and order, Caputo Laplace property."""
    g = fracops.GridFunction.sample(lambda x: np.exp(-x * x), -10.0, 10.0, 801)
    d2 = (4 * g.x ** 2 - 2) * np.exp(-g.x ** 2)
    riesz = np.max(np.abs(fracops.riesz_apply_grid(g, 2.0).samples - d2))
    lin = fracops.GridFunction.sample(lambda t: t, 0.0, 1.0, 10001)
    cap = abs(fracops.caputo_derivative(lin, 0.5, 1.0).value - 2 / math.sqrt(math.pi))
    order, _ = fracops.l1_convergence_order(lambda t: t * t, 2 / math.gamma(2.5), 0.5)
    lap = max(
        fracops.caputo_laplace_check(fracops.GridFunction.sample(np.ones_like, 0, 40, 4001), 0.5, 2.0),
        fracops.caputo_laplace_check(fracops.GridFunction.sample(lambda t: t, 0, 40, 40001), 0.5, 2.0),
        fracops.caputo_laplace_check(fracops.GridFunction.sample(lambda t: np.exp(-t), 0, 40, 40001),
                                     0.3, 1 + 1j),
    )
    worst = max(riesz / 1e-6, cap / 1e-4, abs(order - 1.5) / 0.2, lap / 1e-3)
    return CheckResult("fractional_operators", worst <= 1, worst, 1.0,
                       details={"riesz": riesz, "caputo": cap, "order": order, "laplace": lap})


@_timed
def check_gamma():
    """Reflection, half-integer and recurrence identities."""
    worst = abs(gamma_complex(0.5) - math.sqrt(math.pi))
    for z in (0.3 + 2j, -2.5 + 0.5j, 7.1 - 3j, 25 + 10j):
        g = gamma_complex(z)
        worst = max(worst, abs(gamma_complex(z + 1) / (z * g) - 1),
                    abs(g * gamma_complex(1 - z) * cmath.sin(math.pi * z) / math.pi - 1))
    return CheckResult("gamma", worst <= 1e-12, worst, 1e-12)


CHECKS = (
    check_gamma,
    check_pv_oracle,
    check_alpha0_diagnostic,
    check_consistency_experiment,
    check_mittag_leffler,
    check_fox_h,
    check_free_particle_gaussian,
    check_free_particle_fractional,
    check_effective_potential,
    check_fractional_operators,
)


def run_suite(names=None) -> list[CheckResult]:
    out = []
    for chk in CHECKS:
        name = chk.__name__.removeprefix("check_")
        if names and name not in names:
            continue
        try:
            out.append(chk())
        except Exception as exc:  # a crashing check is a failing check
            out.append(CheckResult(name, False, math.inf, 0.0, details={"error": repr(exc)}))
    return out
