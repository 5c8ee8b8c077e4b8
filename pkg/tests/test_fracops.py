import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fracqm.errors import InvalidParametersError, OutOfDomainError
from fracqm.fracops import (AliasingWarning, GridFunction, SpectralFunction, caputo_derivative,
                            caputo_derivative_grid, caputo_laplace_check, l1_convergence_order,
                            laplace_piecewise_linear, quantum_riesz_apply,
                            quantum_riesz_apply_grid, riesz_apply_grid)

GAUSS_PHI = SpectralFunction(lambda p: np.sqrt(2 * np.pi) * np.exp(-p * p / 2))


def riesz_gauss_oracle(alpha, x):
    """(1/pi) int_0^inf p^alpha sqrt(2 pi) e^{-p^2/2} cos(p x) dp at 30 digits."""
    with mp.workdps(30):
        v = mp.quad(lambda p: p ** alpha * mp.exp(-p * p / 2) * mp.cos(p * x), [0, 4, mp.inf])
        return float(v * mp.sqrt(2 * mp.pi) / mp.pi)


# ----------------------------------------------------------- quantum Riesz

@pytest.mark.parametrize("alpha", [0.5, 1.0, 1.5, 2.0])
def test_plane_wave_is_eigenfunction(alpha):
    f = SpectralFunction.plane_wave(1.7, hbar=0.8)
    for x in (0.0, 0.4, -2.0):
        r = quantum_riesz_apply(f, alpha, x)
        assert abs(r.value - 1.7 ** alpha * np.exp(1j * 1.7 * x / 0.8)) < 1e-13


@pytest.mark.parametrize("alpha", [0.4, 1.0, 1.7])
@pytest.mark.parametrize("x", [0.0, 0.8, 2.5])
def test_gaussian_against_quadrature(alpha, x):
    r = quantum_riesz_apply(GAUSS_PHI, alpha, x, tol=1e-11)
    assert abs(r.value - riesz_gauss_oracle(alpha, x)) < 1e-9


def test_gaussian_order_two_is_minus_laplacian():
    for x in (0.0, 0.5, 1.3):
        r = quantum_riesz_apply(GAUSS_PHI, 2.0, x)
        assert abs(r.value - (1 - x * x) * np.exp(-x * x / 2)) < 1e-10


def test_quantum_riesz_rejects_bad_order():
    with pytest.raises(InvalidParametersError):
        quantum_riesz_apply(GAUSS_PHI, 2.5, 0.0)
    with pytest.raises(InvalidParametersError):
        SpectralFunction(None, hbar=0.0)


# ------------------------------------------------------------- grid Riesz

def _bump_grid(n=1201, L=12.0):
    return GridFunction.sample(lambda x: np.exp(-x * x / 2) * np.cos(x), -L, L, n)


def test_grid_riesz_order_two_is_second_derivative():
    g = _bump_grid()
    x = g.x
    d2 = np.exp(-x * x / 2) * ((x * x - 2) * np.cos(x) + 2 * x * np.sin(x))
    assert np.max(np.abs(riesz_apply_grid(g, 2.0).samples - d2)) < 1e-9


def test_grid_riesz_periodic_cosine():
    g = GridFunction.sample(lambda x: np.cos(3 * x), 0.0, 2 * np.pi, 64, periodic=True)
    for q in (0.5, 1.3, 2.0):
        out = riesz_apply_grid(g, q).samples
        assert np.max(np.abs(out + 3 ** q * np.cos(3 * g.x))) < 1e-11


def test_quantum_grid_matches_spectral_evaluation():
    """Zero padding puts the nonlocal operator on a circle: error ~ 1/P^2."""
    errs = []
    for L in (14.0, 28.0):
        g = GridFunction.sample(lambda x: np.exp(-x * x / 2), -L, L, int(100 * L) + 1)
        out = quantum_riesz_apply_grid(g, 1.0)
        P = 4 * g.samples.size * g.spacing
        worst = 0.0
        for x in (0.0, 0.8, 2.5):
            i = int(round((x - g.start) / g.spacing))
            worst = max(worst, abs(out.samples[i] - riesz_gauss_oracle(1.0, g.x[i])))
        assert worst < 3 * np.sqrt(2 * np.pi) / P ** 2
        errs.append(worst)
    assert 3.5 < errs[0] / errs[1] < 4.5


def test_aliasing_warning():
    g = GridFunction.sample(lambda x: np.cos(0.95 * np.pi * x), 0.0, 100.0, 101)
    with pytest.warns(AliasingWarning):
        riesz_apply_grid(g, 1.0)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.1, 2.0), st.floats(-3, 3), st.floats(-3, 3))
def test_grid_riesz_linear(q, a, b):
    f = _bump_grid(401)
    g = GridFunction.sample(lambda x: 1 / np.cosh(x) ** 2, -12.0, 12.0, 401)
    lhs = riesz_apply_grid(a * f + b * g, q).samples
    rhs = a * riesz_apply_grid(f, q).samples + b * riesz_apply_grid(g, q).samples
    assert np.max(np.abs(lhs - rhs)) < 1e-11 * (1 + abs(a) + abs(b))


def test_grid_validation():
    with pytest.raises(InvalidParametersError):
        GridFunction(np.zeros(3), 0.1)
    with pytest.raises(InvalidParametersError):
        GridFunction(np.zeros(10), -0.1)
    with pytest.raises(InvalidParametersError):
        riesz_apply_grid(_bump_grid(101), 0.0)


# ---------------------------------------------------------------- Caputo

@pytest.mark.parametrize("q", [0.2, 0.5, 0.9])
def test_caputo_of_linear_function_is_exact(q):
    g = GridFunction.sample(lambda t: 3 * t + 1, 0.0, 2.0, 101)
    for t in (0.37, 1.0, 2.0):
        ref = 3 * t ** (1 - q) / math.gamma(2 - q)
        assert abs(caputo_derivative(g, q, t).value - ref) < 1e-12


def test_caputo_quadratic_error_estimate_is_honest():
    q = 0.5
    g = GridFunction.sample(lambda t: t * t, 0.0, 1.0, 2001)
    r = caputo_derivative(g, q, 1.0)
    err = abs(r.value - 2 / math.gamma(3 - q))
    assert err < 1e-5
    assert err <= 2 * r.abs_err


@pytest.mark.parametrize("q,expected", [(0.3, 1.7), (0.5, 1.5), (0.8, 1.2)])
def test_l1_order_is_two_minus_q(q, expected):
    slope, errs = l1_convergence_order(lambda t: t * t, 2 / math.gamma(3 - q), q)
    assert abs(slope - expected) < 0.2
    assert errs[-1] < errs[0]


def test_caputo_grid_matches_pointwise():
    g = GridFunction.sample(np.sin, 0.0, 3.0, 301)
    d = caputo_derivative_grid(g, 0.6)
    assert d.samples[0] == 0
    for i in (50, 177, 300):
        assert abs(d.samples[i] - caputo_derivative(g, 0.6, g.x[i]).value) < 1e-12


def test_caputo_domain_errors():
    g = GridFunction.sample(lambda t: t, 0.0, 1.0, 11)
    with pytest.raises(OutOfDomainError):
        caputo_derivative(g, 0.5, 1.5)
    with pytest.raises(OutOfDomainError):
        caputo_derivative(g, 0.5, 0.0)
    with pytest.raises(InvalidParametersError):
        caputo_derivative(g, 1.0, 0.5)


def test_piecewise_linear_laplace_is_exact_for_lines():
    T, s = 3.0, 0.7 + 0.2j
    g = GridFunction.sample(lambda t: 2 * t - 1, 0.0, T, 7)
    ref = (2 * (1 - np.exp(-s * T) * (1 + s * T)) / s ** 2) - (1 - np.exp(-s * T)) / s
    assert abs(laplace_piecewise_linear(g, s) - ref) < 1e-13


@pytest.mark.parametrize("f,q,s", [
    (np.ones_like, 0.5, 2.0),
    (lambda t: t, 0.5, 2.0),
    (lambda t: np.exp(-t), 0.3, 1 + 1j),
    (np.sin, 0.7, 1.5),
])
def test_caputo_laplace_property(f, q, s):
    g = GridFunction.sample(f, 0.0, 40.0, 40001)
    assert caputo_laplace_check(g, q, s) < 1e-3


def test_caputo_laplace_needs_right_half_plane():
    g = GridFunction.sample(np.ones_like, 0.0, 1.0, 11)
    with pytest.raises(InvalidParametersError):
        caputo_laplace_check(g, 0.5, -1.0)
