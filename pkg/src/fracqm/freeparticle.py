"""Space-time fractional free particle started from a point.

``Psi(x, t) = (Psi0/pi) int_0^inf cos(kx) E_alpha(-w k^beta) dk`` with
``w = i^alpha D hbar^(beta-1) t^alpha`` (principal ``i^alpha``), together
with the Fox H closed forms of the same wavefunction and their limits.
"""
from __future__ import annotations

import cmath
import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import FracQMError, InvalidParametersError, NonConvergenceError
from .quadrature import integrate_adaptive, oscillatory_tail
from .results import EvalResult
from .specfun.foxh import FoxHParams, MellinBarnesConfig, foxh_eval
from .specfun.gamma import rgamma_array
from .specfun.mittag_leffler import mittag_leffler_array

METHODS = ("momentum_integral", "foxh", "foxh_h1232", "foxh_h2012", "foxh_h1011",
           "gaussian", "foxh_space", "foxh_space_alt")


@dataclass(frozen=True)
class FracParams:
    alpha: float = 1.0
    beta: float = 2.0
    D_check: float = 0.5
    hbar: float = 1.0
    psi0: complex = 1.0

    def __post_init__(self):
        if not 0 < self.alpha <= 1:
            raise InvalidParametersError(f"alpha={self.alpha} outside (0, 1]")
        if not 1 < self.beta <= 2:
            raise InvalidParametersError(f"beta={self.beta} outside (1, 2]")
        if not (self.D_check > 0 and self.hbar > 0):
            raise InvalidParametersError("D_check and hbar must be positive")

    def i_pow(self) -> complex:
        return cmath.exp(0.5j * math.pi * self.alpha)

    def rate(self, t: float) -> complex:
        """``w`` in ``E_alpha(-w k^beta)``."""
        return self.i_pow() * self.D_check * self.hbar ** (self.beta - 1) * t ** self.alpha


@dataclass(frozen=True)
class WavefieldSample:
    x: float
    t: float
    value: complex
    method: str
    err: float
    alpha: float = math.nan
    beta: float = math.nan
    converged: bool = True


def _check_t(t):
    if not t > 0:
        raise InvalidParametersError(f"t={t} must be positive")


def _sample(p, x, t, value, method, err, conv=True):
    return WavefieldSample(float(x), float(t), complex(value), method, float(err),
                           p.alpha, p.beta, bool(conv))


# --------------------------------------------------------------------------
# integral representation

def _asymptotic_tail_at_origin(alpha, beta, w, K, terms=12):
    """``int_K^inf E_alpha(-w k^beta) dk`` from the algebraic expansion of E_alpha."""
    j = np.arange(1, terms + 1)
    coef = rgamma_array(1 - alpha * j)
    vals = -((-w) ** (-j.astype(float))) * K ** (1 - beta * j) / ((beta * j - 1)) * coef
    return complex(vals.sum()), float(abs(vals[-1]))


def _pure_phase_ray(x, c, beta, start, theta, sign, tol):
    """``1/2 int e^{sign i k x - i c k^beta} dk`` along ``k = start + r e^{-i theta}``, r > 0."""
    rot = cmath.exp(-1j * theta)

    def f(r):
        r = np.asarray(r, dtype=float)
        k = start + rot * r
        with np.errstate(over="ignore", invalid="ignore"):
            e = sign * 1j * k * x - 1j * c * k ** beta
            out = 0.5 * rot * np.exp(e)
        return np.where(e.real < -700, 0, out)

    return integrate_adaptive(f, 0.0, math.inf, tol)


_MAX_SADDLE_PERIODS = 2e4


def _pure_phase_integral(x, c, beta, tol):
    """``int_0^inf cos(kx) e^{-i c k^beta} dk``.

    ``e^{-ikx}`` decays on the ray ``arg k = -pi/2beta``. ``e^{+ikx}`` has a
    saddle at ``k0 = (x / c beta)^(1/(beta-1))``: the real axis up to ``k0``,
    then the steepest-descent ray from ``k0``.
    """
    r = _pure_phase_ray(x, c, beta, 0.0, 0.5 * math.pi / beta, -1, tol / 3)
    k0 = (x / (c * beta)) ** (1 / (beta - 1)) if x > 0 else 0.0
    if k0 == 0:
        return r + _pure_phase_ray(x, c, beta, 0.0, 0.5 * math.pi / beta, 1, tol / 3)
    periods = k0 * x / (2 * math.pi)
    if periods > _MAX_SADDLE_PERIODS:
        raise NonConvergenceError(
            f"saddle at k0={k0:.3g} lies {periods:.3g} oscillations out", {"k0": k0})

    def g(k):
        k = np.asarray(k, dtype=float)
        return 0.5 * np.exp(1j * (k * x - c * k ** beta))

    cuts = np.linspace(0.0, k0, int(periods) + 2)[1:-1]
    head = integrate_adaptive(g, 0.0, k0, tol / 3, breakpoints=tuple(cuts),
                              max_intervals=max(2000, 4 * cuts.size))
    return r + head + _pure_phase_ray(x, c, beta, k0, 0.25 * math.pi, 1, tol / 3)


def psi_integral(p: FracParams, x: float, t: float, tol: float = 1e-10) -> WavefieldSample:
    """Evaluate the cosine-transform form by quadrature.

    For ``alpha = 1`` the two exponentials of ``cos(kx)`` are deformed
    separately into the lower half plane (see :func:`_pure_phase_integral`).
    Otherwise the integral runs to a cut ``K`` beyond which ``E_alpha`` is algebraic in ``k`` and the remainder is
    an oscillatory tail (or, at ``x = 0``, the integrated asymptotic series).
    The cut grows like ``1/(1 - alpha)``; just below ``alpha = 1`` use
    :func:`psi_foxh`.
    """
    _check_t(t)
    al, be = p.alpha, p.beta
    w = p.rate(t)
    x = abs(float(x))
    if al == 1.0:
        r = _pure_phase_integral(x, abs(w), be, tol)
        val = p.psi0 / math.pi * r.value
        return _sample(p, x, t, val, "momentum_integral", abs(p.psi0) / math.pi * r.abs_err_estimate,
                       r.converged)

    def env(k):
        k = np.asarray(k, dtype=float)
        return mittag_leffler_array(al, -w * k ** be)

    # beyond K the exponential part of E_alpha is negligible
    s = math.sin(math.pi / al)
    target = math.log(1e3 / tol)
    kmin = (60.0 / abs(w)) ** (1 / be)
    if 3 * al > 2 and s < 0:
        kexp = (target / (abs(w) ** (1 / al) * -s)) ** (al / be)
        K = max(kmin, kexp)
    else:
        K = kmin
    if x > 0:
        # align K with a zero of cos(kx) so the tail starts on a half period
        K = (math.floor(K * x / math.pi - 0.5) + 1.5) * math.pi / x

    def f(k):
        return np.cos(k * x) * env(k)

    head = integrate_adaptive(f, 0.0, K, tol / 2)
    if x > 0:
        tail = oscillatory_tail(env, x, K, tol / 2, kind="cos")
        tv, te, tc = tail.value, tail.abs_err_estimate, tail.converged
    else:
        tv, te = _asymptotic_tail_at_origin(al, be, w, K)
        tc = True
    val = p.psi0 / math.pi * (head.value + tv)
    err = abs(p.psi0) / math.pi * (head.abs_err_estimate + te)
    return _sample(p, x, t, val, "momentum_integral", err, head.converged and tc)


# --------------------------------------------------------------------------
# Fox H forms

def cosine_kernel_params(alpha: float) -> FoxHParams:
    """``H^{1,1}_{1,2}(u | (0,1); (0,1),(0,alpha)) = E_alpha(-u)``."""
    return FoxHParams(1, 1, [(0, 1)], [(0, 1), (0, alpha)])


def closed_form_params(alpha: float, beta: float) -> FoxHParams:
    return FoxHParams(1, 2, [(0.5, beta / 2), (0, 1), (0, beta / 2)], [(0, 1), (0, alpha)])


def _foxh(h, z, cfg):
    r = foxh_eval(h, z, cfg)
    return r.value, r.abs_err, r.converged


def psi_foxh(p: FracParams, x: float, t: float,
             cfg: MellinBarnesConfig | None = None) -> WavefieldSample:
    """``Psi0/(sqrt(pi)|x|) H^{1,2}_{3,2}(w (2/|x|)^beta)``."""
    _check_t(t)
    ax = abs(float(x))
    if ax == 0:
        raise InvalidParametersError("the closed form needs x != 0")
    z = p.rate(t) * (2 / ax) ** p.beta
    v, e, c = _foxh(closed_form_params(p.alpha, p.beta), z, cfg)
    pref = p.psi0 / (math.sqrt(math.pi) * ax)
    method = "foxh"
    if p.alpha == 1.0:
        method = "foxh_space"
    return _sample(p, x, t, pref * v, method, abs(pref) * e, c)


def psi_time_fractional(p: FracParams, x: float, t: float,
                        cfg: MellinBarnesConfig | None = None) -> list[WavefieldSample]:
    """Three equivalent H-forms for ``beta = 2``: H^{1,2}_{3,2}, H^{2,0}_{1,2}, H^{1,0}_{1,1}."""
    if p.beta != 2.0:
        raise InvalidParametersError("time-fractional forms need beta = 2")
    _check_t(t)
    ax = abs(float(x))
    if ax == 0:
        raise InvalidParametersError("the closed forms need x != 0")
    al = p.alpha
    Dt = p.D_check * p.hbar * t ** al
    ia = p.i_pow()
    out = []
    forms = (
        ("foxh_h1232", FoxHParams(1, 2, [(0.5, 1), (0, 1), (0, 1)], [(0, 1), (0, al)]),
         4 * ia * Dt / ax ** 2, 1 / (math.sqrt(math.pi) * ax)),
        ("foxh_h2012", FoxHParams(2, 0, [(1, al)], [(0.5, 1), (1, 1)]),
         ax ** 2 / (4 * ia * Dt), 1 / (math.sqrt(math.pi) * ax)),
        ("foxh_h1011", FoxHParams(1, 0, [(1, al)], [(1, 2)]),
         ax ** 2 / (ia * Dt), 1 / ax),
    )
    for name, h, z, pref in forms:
        v, e, c = _foxh(h, z, cfg)
        out.append(_sample(p, x, t, p.psi0 * pref * v, name, abs(p.psi0) * pref * e, c))
    return out


def alt_space_params(beta: float) -> FoxHParams:
    return FoxHParams(1, 1, [(1, 1 / beta), (1, 0.5)], [(1, 1), (1, 0.5)])


def psi_space_fractional(p: FracParams, x: float, t: float,
                         cfg: MellinBarnesConfig | None = None) -> list[WavefieldSample]:
    """``alpha = 1``: the H^{1,2}_{3,2} form and the H^{1,1}_{2,2} form in the variable ``|x|``.

    The second form carries the prefactor ``pi Psi0/(beta |x|)``;
    see :func:`space_form_ratio` for how the two compare.
    """
    if p.alpha != 1.0:
        raise InvalidParametersError("space-fractional forms need alpha = 1")
    _check_t(t)
    ax = abs(float(x))
    if ax == 0:
        raise InvalidParametersError("the closed forms need x != 0")
    first = psi_foxh(p, x, t, cfg)
    be, hb = p.beta, p.hbar
    z = (1 / hb) * (hb / (1j * p.D_check * t)) ** (1 / be) * ax
    v, e, c = _foxh(alt_space_params(be), z, cfg)
    pref = math.pi / (be * ax)
    second = _sample(p, x, t, p.psi0 * pref * v, "foxh_space_alt", abs(p.psi0) * pref * e, c)
    return [first, second]


def space_form_ratio(p: FracParams, points, cfg=None) -> list[complex]:
    """``H^{1,2}_{3,2}`` form divided by the ``H^{1,1}_{2,2}`` form at each ``(x, t)``."""
    out = []
    for x, t in points:
        a, b = psi_space_fractional(p, x, t, cfg)
        out.append(a.value / b.value)
    return out


def gaussian_limit(x: float, t: float, D1: float, psi0: complex = 1.0) -> complex:
    """``Psi0 (4 pi i D1 t)^(-1/2) exp(-x^2 / (4 i D1 t))``."""
    _check_t(t)
    return psi0 / cmath.sqrt(4j * math.pi * D1 * t) * cmath.exp(-x * x / (4j * D1 * t))


def norm_diagnostic(p: FracParams, t: float, tol: float = 1e-8) -> EvalResult:
    """``int |Psi(x, t)|^2 dx`` through Parseval: ``|Psi0|^2/pi int_0^inf |E_alpha|^2 dk``.

    Infinite for ``alpha = 1`` (the evolved point source keeps unit modulus
    in ``k``); reported as not converged there.
    """
    _check_t(t)
    if p.alpha == 1.0:
        return EvalResult(math.inf, math.inf, False, "parseval",
                          {"reason": "|E_1| = 1 along the k axis"})
    w = p.rate(t)

    def f(k):
        k = np.asarray(k, dtype=float)
        return np.abs(mittag_leffler_array(p.alpha, -w * k ** p.beta)) ** 2

    r = integrate_adaptive(f, 0.0, math.inf, tol, raise_on_failure=False)
    scale = abs(p.psi0) ** 2 / math.pi
    return EvalResult(scale * r.value.real, scale * r.abs_err_estimate, r.converged, "parseval")


# --------------------------------------------------------------------------
# batches

CSV_COLUMNS = ("alpha", "beta", "x", "t", "method", "re", "im", "err", "converged")


def evaluate(p: FracParams, x: float, t: float, method: str, tol: float = 1e-10,
             cfg: MellinBarnesConfig | None = None) -> WavefieldSample:
    """One sample by name; failures come back flagged rather than raised."""
    try:
        if method == "momentum_integral":
            return psi_integral(p, x, t, tol)
        if method in ("foxh", "foxh_space"):
            return psi_foxh(p, x, t, cfg)
        if method in ("foxh_h1232", "foxh_h2012", "foxh_h1011"):
            return {s.method: s for s in psi_time_fractional(p, x, t, cfg)}[method]
        if method == "foxh_space_alt":
            return psi_space_fractional(p, x, t, cfg)[1]
        if method == "gaussian":
            D1 = p.D_check * p.hbar
            return _sample(p, x, t, gaussian_limit(x, t, D1, p.psi0), method, 0.0)
    except FracQMError:
        return _sample(p, x, t, complex(math.nan, math.nan), method, math.inf, False)
    raise InvalidParametersError(f"unknown method {method!r}")


def samples_to_csv(samples, path=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for s in samples:
        w.writerow([format(s.alpha, ".17g"), format(s.beta, ".17g"), format(s.x, ".17g"),
                    format(s.t, ".17g"), s.method, format(s.value.real, ".17g"),
                    format(s.value.imag, ".17g"), format(s.err, ".17g"),
                    "true" if s.converged else "false"])
    text = buf.getvalue()
    if path is not None:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text
