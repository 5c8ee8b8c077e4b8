"""Hot numeric kernels, each in two flavours.

``*_nb`` functions are numba-compiled loops, ``*_np`` functions are the
vectorised numpy equivalents. The un-suffixed names are bound at import time
according to :data:`fracqm._accel.USE_NUMBA`; both flavours stay importable so
tests and the benchmark can compare them.
"""
import cmath
import math

import numpy as np

from ._accel import USE_NUMBA, njit

__all__ = [
    "cloggamma",
    "ml_series",
    "ml_contour_sum",
    "l1_history",
]

LANCZOS_G = 7.0
LANCZOS_COEF = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
# B_{2k} / (2k (2k-1)), k = 1..8
STIRLING_COEF = np.array([
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
])
HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
LOG_PI = math.log(math.pi)
STIRLING_RADIUS = 10.0


# --------------------------------------------------------------------------
# complex log-gamma

@njit
def _logsin_pi_scalar(z):
    w = math.pi * z
    if abs(w.imag) < 20.0:
        return cmath.log(cmath.sin(w))
    if w.imag > 0.0:
        return -1j * w + cmath.log(1.0 - cmath.exp(2j * w)) + cmath.log(0.5j)
    return 1j * w + cmath.log(1.0 - cmath.exp(-2j * w)) + cmath.log(-0.5j)


@njit
def _loggamma_right(z):
    # valid for Re z >= 0.5
    if abs(z) >= STIRLING_RADIUS:
        zinv = 1.0 / z
        zinv2 = zinv * zinv
        acc = 0.0j
        p = zinv
        for k in range(STIRLING_COEF.shape[0]):
            acc += STIRLING_COEF[k] * p
            p *= zinv2
        return (z - 0.5) * cmath.log(z) - z + HALF_LOG_2PI + acc
    zm = z - 1.0
    x = LANCZOS_COEF[0] + 0.0j
    for i in range(1, LANCZOS_COEF.shape[0]):
        x += LANCZOS_COEF[i] / (zm + i)
    t = zm + LANCZOS_G + 0.5
    return HALF_LOG_2PI + (zm + 0.5) * cmath.log(t) - t + cmath.log(x)


@njit
def _cloggamma_scalar(z):
    if z.real >= 0.5:
        return _loggamma_right(z)
    if z.imag == 0.0 and z.real == math.floor(z.real):
        return complex(math.inf, 0.0)
    return LOG_PI - _logsin_pi_scalar(z) - _loggamma_right(1.0 - z)


@njit
def cloggamma_nb(z):
    out = np.empty(z.shape[0], dtype=np.complex128)
    for i in range(z.shape[0]):
        out[i] = _cloggamma_scalar(z[i])
    return out


def _logsin_pi_np(z):
    w = np.pi * z
    out = np.empty_like(w)
    small = np.abs(w.imag) < 20.0
    up = ~small & (w.imag > 0)
    dn = ~small & ~up
    with np.errstate(divide="ignore", invalid="ignore"):
        out[small] = np.log(np.sin(w[small]))
    out[up] = -1j * w[up] + np.log1p(-np.exp(2j * w[up])) + np.log(0.5j)
    out[dn] = 1j * w[dn] + np.log1p(-np.exp(-2j * w[dn])) + np.log(-0.5j)
    return out


def _loggamma_right_np(z):
    out = np.empty_like(z)
    big = np.abs(z) >= STIRLING_RADIUS
    if big.any():
        zb = z[big]
        zinv = 1.0 / zb
        zinv2 = zinv * zinv
        acc = np.zeros_like(zb)
        p = zinv
        for c in STIRLING_COEF:
            acc += c * p
            p = p * zinv2
        out[big] = (zb - 0.5) * np.log(zb) - zb + HALF_LOG_2PI + acc
    sm = ~big
    if sm.any():
        zm = z[sm] - 1.0
        x = np.full_like(zm, LANCZOS_COEF[0])
        for i in range(1, LANCZOS_COEF.shape[0]):
            x += LANCZOS_COEF[i] / (zm + i)
        t = zm + LANCZOS_G + 0.5
        out[sm] = HALF_LOG_2PI + (zm + 0.5) * np.log(t) - t + np.log(x)
    return out


def cloggamma_np(z):
    z = np.asarray(z, dtype=np.complex128)
    out = np.empty_like(z)
    right = z.real >= 0.5
    out[right] = _loggamma_right_np(z[right])
    left = ~right
    if left.any():
        zl = z[left]
        pole = (zl.imag == 0.0) & (zl.real == np.floor(zl.real))
        val = LOG_PI - _logsin_pi_np(zl) - _loggamma_right_np(1.0 - zl)
        val[pole] = complex(np.inf, 0.0)
        out[left] = val
    return out


# --------------------------------------------------------------------------
# Mittag-Leffler pieces

@njit
def ml_series_nb(alpha, z, max_terms):
    """Return (sum, n_terms, largest |term|, last |term|) of sum z^k / Gamma(alpha k + 1)."""
    if z == 0:
        return 1.0 + 0.0j, 1, 1.0, 0.0
    logz = cmath.log(z)
    total = 1.0 + 0.0j
    peak = 1.0
    last = 1.0
    k = 1
    small_run = 0
    while k < max_terms:
        term = cmath.exp(k * logz - math.lgamma(alpha * k + 1.0))
        total += term
        last = abs(term)
        if last > peak:
            peak = last
        if last <= 1e-17 * max(1.0, abs(total)):
            small_run += 1
            if small_run >= 3:
                k += 1
                break
        else:
            small_run = 0
        k += 1
    return total, k, peak, last


def ml_series_np(alpha, z, max_terms):
    if z == 0:
        return 1.0 + 0.0j, 1, 1.0, 0.0
    k = np.arange(1, max_terms)
    lg = np.array([math.lgamma(alpha * kk + 1.0) for kk in k])
    logterm = k * np.log(complex(z)) - lg
    terms = np.exp(np.minimum(logterm.real, 700.0) + 1j * logterm.imag)
    mags = np.abs(terms)
    csum = 1.0 + np.cumsum(terms)
    tiny = mags <= 1e-17 * np.maximum(1.0, np.abs(csum))
    # first index where three consecutive tiny terms occur
    run = tiny[:-2] & tiny[1:-1] & tiny[2:]
    idx = np.flatnonzero(run)
    stop = idx[0] + 2 if idx.size else len(k) - 1
    return complex(csum[stop]), int(stop + 2), float(max(1.0, mags[: stop + 1].max())), float(mags[stop])


@njit
def ml_contour_sum_nb(alpha, z, mu, h, n):
    """Trapezoid sum over the parabola s = mu (1 + iu)^2, |u| <= n h.

    Returns (integral, sum of |terms| * h / 2pi) for the integrand
    exp(s) s^(alpha-1) / (s^alpha - z) ds / (2 pi i).
    """
    acc = 0.0j
    mag = 0.0
    for k in range(-n, n + 1):
        u = k * h
        w = 1.0 + 1j * u
        s = mu * w * w
        ds = 2j * mu * w
        ls = cmath.log(s)
        val = cmath.exp(s + (alpha - 1.0) * ls) / (cmath.exp(alpha * ls) - z) * ds
        acc += val
        mag += abs(val)
    scale = h / (2.0 * math.pi)
    return acc * scale / 1j, mag * scale


def ml_contour_sum_np(alpha, z, mu, h, n):
    u = h * np.arange(-n, n + 1)
    w = 1.0 + 1j * u
    s = mu * w * w
    ds = 2j * mu * w
    ls = np.log(s)
    val = np.exp(s + (alpha - 1.0) * ls) / (np.exp(alpha * ls) - z) * ds
    scale = h / (2.0 * np.pi)
    return complex(val.sum() * scale / 1j), float(np.abs(val).sum() * scale)


# --------------------------------------------------------------------------
# Caputo L1 history sums

@njit
def l1_history_nb(increments, q):
    """out[n] = sum_{j<n} b_{n-1-j} * increments[j], b_i = (i+1)^(1-q) - i^(1-q)."""
    n = increments.shape[0]
    b = np.empty(n)
    e = 1.0 - q
    for i in range(n):
        b[i] = (i + 1.0) ** e - i ** e
    out = np.zeros(n + 1, dtype=increments.dtype)
    for m in range(1, n + 1):
        acc = increments[0] * 0.0
        for j in range(m):
            acc += b[m - 1 - j] * increments[j]
        out[m] = acc
    return out


def l1_history_np(increments, q):
    increments = np.asarray(increments)
    n = increments.shape[0]
    i = np.arange(n, dtype=float)
    b = (i + 1.0) ** (1.0 - q) - i ** (1.0 - q)
    out = np.zeros(n + 1, dtype=np.result_type(increments, float))
    out[1:] = np.convolve(increments, b)[:n]
    return out


if USE_NUMBA:
    cloggamma = cloggamma_nb
    ml_series = ml_series_nb
    ml_contour_sum = ml_contour_sum_nb
    l1_history = l1_history_nb
else:
    cloggamma = cloggamma_np
    ml_series = ml_series_np
    ml_contour_sum = ml_contour_sum_np
    l1_history = l1_history_np
