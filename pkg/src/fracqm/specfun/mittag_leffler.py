"""One-parameter Mittag-Leffler function E_alpha(z), 0 < alpha <= 2.

Small arguments use the power series. Elsewhere E_alpha is the inverse
Laplace transform of s^(alpha-1)/(s^alpha - z) at t = 1, evaluated by a
trapezoid rule on the parabola s = mu (1 + iu)^2 plus the residues of the
poles s^alpha = z enclosed by it.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from ..errors import InvalidParametersError, NonConvergenceError
from ..kernels import ml_contour_sum, ml_series
from ..results import EvalResult

SERIES_RADIUS = 5.0
# series is accepted only if the largest term keeps rounding below ~1e-11
SERIES_PEAK_LIMIT = 500.0
MAX_SERIES_TERMS = 4000
_EPS = np.finfo(float).eps
_SQRT_MU_CANDIDATES = (1.0, 0.75, 1.5, 0.5, 2.0, 2.5, 0.35, 3.0, 0.25, 4.0)


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha <= 2.0:
        raise InvalidParametersError(f"alpha must lie in (0, 2], got {alpha}")
    return alpha


def ml_by_series(alpha: float, z: complex) -> EvalResult:
    alpha = _check_alpha(alpha)
    z = complex(z)
    total, nterms, peak, last = ml_series(alpha, z, MAX_SERIES_TERMS)
    err = last + 4.0 * nterms * _EPS * peak
    try:
        converged = math.isfinite(peak) and last <= 1e-15 * max(1.0, abs(total))
    except OverflowError:  # the partial sums left the double range
        converged, err = False, math.inf
    return EvalResult(complex(total), float(err), bool(converged), "series",
                      {"terms": int(nterms), "peak_term": float(peak)})


def _poles(alpha: float, z: complex) -> list[complex]:
    """Solutions of s^alpha = z on the principal sheet (|arg s| < pi)."""
    if z == 0:
        return []
    r = abs(z) ** (1.0 / alpha)
    theta = cmath.phase(z)
    out = []
    kmin = math.ceil((-alpha * math.pi - theta) / (2 * math.pi))
    kmax = math.floor((alpha * math.pi - theta) / (2 * math.pi))
    for k in range(kmin, kmax + 1):
        ang = (theta + 2 * math.pi * k) / alpha
        if -math.pi < ang < math.pi:
            out.append(cmath.rect(r, ang))
    return out


def _choose_mu(poles):
    # u-plane distance of a pole from the real axis is |1 - Re sqrt(s*/mu)|
    best = None
    for smu in _SQRT_MU_CANDIDATES:
        d = 1.0
        for sp in poles:
            d = min(d, abs(1.0 - cmath.sqrt(sp).real / smu))
        if d >= 0.5:
            return smu * smu, d
        if best is None or d > best[1]:
            best = (smu * smu, d)
    return best


def ml_by_contour(alpha: float, z: complex, tol: float = 1e-14) -> EvalResult:
    alpha = _check_alpha(alpha)
    z = complex(z)
    poles = _poles(alpha, z)
    mu, dist = _choose_mu(poles)
    dist = max(0.8 * dist, 0.05)
    inside = [sp for sp in poles if cmath.sqrt(sp / mu).real > 1.0]
    try:
        residue = sum(cmath.exp(sp) for sp in inside) / alpha
    except OverflowError:
        raise OverflowError(f"E_{alpha}({z}) overflows") from None
    # bound of |exp(s)| over the analyticity strip sets the step
    growth = mu * (1.0 + dist) ** 2
    log_tol = -math.log(tol)
    h = 2.0 * math.pi * dist / (growth + log_tol + 2.0)
    umax = math.sqrt(1.0 + (log_tol + 5.0 + abs(math.log(mu))) / mu)
    n = int(math.ceil(umax / h))
    val, mag = ml_contour_sum(alpha, z, mu, h, n)
    h2 = 1.25 * h
    val2, _ = ml_contour_sum(alpha, z, mu, h2, int(math.ceil(umax / h2)))
    err = abs(val - val2) + 8.0 * _EPS * (mag + abs(residue))
    value = val + residue
    converged = err <= max(1e-10, 10 * tol) * max(1.0, abs(value))
    return EvalResult(complex(value), float(err), bool(converged), "contour",
                      {"mu": mu, "h": h, "nodes": 2 * n + 1, "poles_enclosed": len(inside)})


def mittag_leffler(alpha: float, z: complex, tol: float = 1e-10) -> EvalResult:
    """E_alpha(z) = sum_k z^k / Gamma(alpha k + 1).

    Parameters
    ----------
    alpha : float
        Order in (0, 2].
    z : complex
        Argument.
    tol : float
        Absolute error target; :class:`NonConvergenceError` is raised when the
        estimate exceeds it (relative to ``|E|`` for values larger than one).

    Returns
    -------
    EvalResult
    """
    alpha = _check_alpha(alpha)
    z = complex(z)
    if z == 0:
        return EvalResult(1.0 + 0j, 0.0, True, "series", {"terms": 1})
    if alpha == 1.0:
        if z.real > 709.0:
            raise OverflowError("E_1(z) overflows")
        v = cmath.exp(z)
        return EvalResult(v, 4 * _EPS * abs(v), True, "exp")
    res = None
    if abs(z) <= SERIES_RADIUS:
        res = ml_by_series(alpha, z)
        if (not res.converged or res.diagnostics["peak_term"] > SERIES_PEAK_LIMIT
                or res.abs_err > tol * max(1.0, abs(res.value))):
            res = None
    if res is None:
        res = ml_by_contour(alpha, z)
    if not math.isfinite(abs(res.value)):
        raise OverflowError(f"E_{alpha}({z}) overflows")
    if res.abs_err > tol * max(1.0, abs(res.value)):
        raise NonConvergenceError(
            f"Mittag-Leffler E_{alpha}({z}) reached only {res.abs_err:.2e}",
            {"value": res.value, "abs_err": res.abs_err, **res.diagnostics})
    return res


def mittag_leffler_array(alpha: float, z) -> np.ndarray:
    """Elementwise :func:`mittag_leffler` values (no error objects)."""
    z = np.asarray(z, dtype=np.complex128)
    out = np.empty(z.shape, dtype=np.complex128)
    flat = z.ravel()
    res = out.ravel()
    for i, zi in enumerate(flat):
        res[i] = mittag_leffler(alpha, zi).value
    return out
