import csv
import io
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fracqm.errors import InvalidParametersError, NonConvergenceError
from fracqm.freeparticle import (CSV_COLUMNS, FracParams, evaluate, gaussian_limit,
                                 norm_diagnostic, psi_foxh, psi_integral,
                                 psi_space_fractional, psi_time_fractional, samples_to_csv,
                                 space_form_ratio)


def levy_oracle(beta, D, x, t):
    """(1/pi) int_0^inf cos(kx) exp(-i D t k^beta) dk on the ray where the phase decays."""
    with mp.workdps(30):
        rot = mp.expj(-mp.pi / (2 * beta))
        v = mp.quad(lambda r: rot * mp.cos(rot * r * x) * mp.exp(-D * t * r ** beta),
                    [0, 2, 8, mp.inf])
        return complex(v / mp.pi)


def test_param_validation():
    for kw in ({"alpha": 0.0}, {"alpha": 1.2}, {"beta": 1.0}, {"beta": 2.5}, {"D_check": 0.0}):
        with pytest.raises(InvalidParametersError):
            FracParams(**kw)
    with pytest.raises(InvalidParametersError):
        psi_integral(FracParams(), 1.0, 0.0)


@pytest.mark.parametrize("x,t", [(0.0, 1.0), (0.5, 1.0), (2.0, 0.3), (-3.0, 2.0)])
def test_gaussian_limit(x, t):
    p = FracParams(1.0, 2.0, 0.5)
    ref = gaussian_limit(x, t, 0.5)
    assert abs(psi_integral(p, x, t, 1e-11).value - ref) < 1e-9
    if x:
        assert abs(psi_foxh(p, x, t).value - ref) < 1e-10
        for s in psi_time_fractional(p, x, t):
            assert abs(s.value - ref) < 1e-10


@pytest.mark.parametrize("x,t", [(0.7, 1.0), (2.0, 0.5)])
def test_levy_propagator_against_mpmath(x, t):
    p = FracParams(1.0, 1.5, 0.5)
    ref = levy_oracle(1.5, 0.5, x, t)
    assert abs(psi_integral(p, x, t).value - ref) < 1e-9
    assert abs(psi_foxh(p, x, t).value - ref) < 1e-11


# mpmath at 60 digits on a shallow ray (two different angles agree to all digits)
LEVY_FAR = [
    (1.3125, 3.0, 1.0, -3.9066198308299205 - 2.5826104563135424j),
    (1.6, 6.0, 0.3, -2.6703266888431725 + 1.523246990338625j),
]


@pytest.mark.parametrize("beta,x,t,ref", LEVY_FAR)
def test_levy_propagator_far_from_the_origin(beta, x, t, ref):
    r = psi_integral(FracParams(1.0, beta, 0.5), x, t)
    assert r.converged
    assert abs(r.value - ref) < 1e-11


def test_levy_saddle_too_far_out_is_reported():
    with pytest.raises(NonConvergenceError):
        psi_integral(FracParams(1.0, 1.2, 0.5), 6.0, 0.3)


@pytest.mark.parametrize("alpha,beta", [(0.5, 1.5), (0.7, 1.5), (0.9, 1.8)])
@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
def test_integral_and_closed_form_agree(alpha, beta, x):
    p = FracParams(alpha, beta)
    a = psi_integral(p, x, 1.0)
    b = psi_foxh(p, x, 1.0)
    assert a.converged and b.converged
    assert abs(a.value - b.value) < 1e-9 + 2 * (a.err + b.err)


@pytest.mark.parametrize("alpha", [0.4, 0.6, 1.0])
def test_time_fractional_forms_agree(alpha):
    p = FracParams(alpha, 2.0)
    for x in (0.5, 1.5):
        vals = [s.value for s in psi_time_fractional(p, x, 1.0)]
        assert max(abs(v - vals[0]) for v in vals) < 1e-12
        assert abs(vals[0] - psi_integral(p, x, 1.0).value) < 1e-9
    with pytest.raises(InvalidParametersError):
        psi_time_fractional(FracParams(alpha, 1.5), 1.0, 1.0)


@settings(max_examples=15, deadline=None)
@given(st.floats(0.3, 0.999) | st.just(1.0), st.floats(1.2, 2.0), st.floats(0.2, 3.0))
def test_wavefunction_is_even_in_x(alpha, beta, x):
    p = FracParams(alpha, beta)
    assert psi_integral(p, x, 1.0).value == psi_integral(p, -x, 1.0).value
    a, b = evaluate(p, x, 1.0, "foxh"), evaluate(p, -x, 1.0, "foxh")
    assert a.converged == b.converged
    assert a.value == b.value or (np.isnan(a.value) and np.isnan(b.value))


@settings(max_examples=15, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.3, 2.5))
def test_linear_in_initial_amplitude(re, im, x):
    c = complex(re, im)
    base = psi_foxh(FracParams(0.8, 1.6), x, 1.0).value
    scaled = psi_foxh(FracParams(0.8, 1.6, psi0=c), x, 1.0).value
    assert abs(scaled - c * base) < 1e-14 * (1 + abs(c))


def test_closed_form_covers_alpha_just_below_one():
    p = FracParams(0.99999, 2.0)
    v = psi_foxh(p, 1.0, 1.0)
    assert v.converged
    assert abs(v.value - gaussian_limit(1.0, 1.0, 0.5)) < 1e-4


def test_origin_is_the_limit_of_small_x():
    p = FracParams(0.6, 2.0)
    at0 = psi_integral(p, 0.0, 1.0).value
    near = [psi_integral(p, x, 1.0).value for x in (1e-2, 5e-3, 2.5e-3)]
    gaps = [abs(v - at0) for v in near]
    # the approach is linear in |x|: a cusp at the origin
    for g0, g1 in zip(gaps, gaps[1:]):
        assert abs(g0 / g1 - 2) < 0.02


def test_space_form_ratio_is_one_over_pi():
    p = FracParams(1.0, 1.5)
    ratios = space_form_ratio(p, [(0.5, 1.0), (1.0, 1.0), (2.0, 0.5)])
    for r in ratios:
        assert abs(r - 1 / math.pi) < 1e-9
    assert psi_space_fractional(p, 1.0, 1.0)[0].method == "foxh_space"
    with pytest.raises(InvalidParametersError):
        psi_space_fractional(FracParams(0.5, 1.5), 1.0, 1.0)


def test_norm_diagnostic():
    r = norm_diagnostic(FracParams(0.7, 1.5), 1.0)
    assert r.converged and 0 < r.value < 1
    assert abs(r.value - 0.40742789525) < 1e-8
    inf = norm_diagnostic(FracParams(1.0, 1.5), 1.0)
    assert math.isinf(inf.value) and not inf.converged


def test_norm_decays_in_time():
    p = FracParams(0.7, 1.5)
    assert norm_diagnostic(p, 2.0).value < norm_diagnostic(p, 1.0).value


def test_evaluate_dispatch_and_flags():
    p = FracParams(0.6, 2.0)
    with pytest.raises(InvalidParametersError):
        evaluate(p, 1.0, 1.0, "nope")
    bad = evaluate(p, 0.0, 1.0, "foxh")
    assert not bad.converged and math.isinf(bad.err) and np.isnan(bad.value.real)
    g = evaluate(FracParams(1.0, 2.0), 1.0, 1.0, "gaussian")
    assert g.value == gaussian_limit(1.0, 1.0, 0.5)
    h = evaluate(p, 1.0, 1.0, "foxh_h2012")
    assert h.method == "foxh_h2012"


def test_samples_csv():
    p = FracParams(0.6, 2.0)
    samples = [evaluate(p, x, 1.0, m) for x in (0.5, 1.0) for m in ("momentum_integral", "foxh")]
    rows = list(csv.DictReader(io.StringIO(samples_to_csv(samples))))
    assert tuple(rows[0]) == CSV_COLUMNS
    for s, r in zip(samples, rows):
        assert complex(float(r["re"]), float(r["im"])) == s.value
        assert r["method"] == s.method
