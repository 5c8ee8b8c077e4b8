"""Fractional operators.

The quantum Riesz operator acts as the momentum multiplier ``|p|**alpha``;
the grid Riesz derivative multiplies the discrete spectrum by ``-|w|**q``;
the Caputo derivative uses the L1 scheme (exact for piecewise-linear data).
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidParametersError, OutOfDomainError
from .kernels import l1_history
from .quadrature import OscTerm, PVProblem, integrate_adaptive, pv_integrate
from .results import EvalResult


class AliasingWarning(UserWarning):
    """Spectral content reaches the Nyquist band of the grid."""


@dataclass(frozen=True)
class SpectralFunction:
    """Momentum-space wavefunction ``phi(p)`` with ``psi(x) = (1/2 pi hbar) int e^{ipx/hbar} phi dp``.

    Transforms with real-axis singular factors can describe themselves as
    ``smooth(p) * sum(oscillation) / prod(p - pole)``; the operator then goes
    through the principal-value engine. ``atoms`` are ``(p0, weight)`` pairs
    for delta components ``weight * delta(p - p0)``.
    """

    phi: Callable | None
    hbar: float = 1.0
    smooth: Callable | None = None
    poles: tuple = ()
    oscillation: tuple = ()
    decay: float = -1.0
    atoms: tuple = ()

    def __post_init__(self):
        if not self.hbar > 0:
            raise InvalidParametersError("hbar must be positive")

    @classmethod
    def plane_wave(cls, p0: float, hbar: float = 1.0) -> "SpectralFunction":
        """``exp(i p0 x / hbar)``."""
        return cls(None, hbar, atoms=((float(p0), 2 * math.pi * hbar),))

    @property
    def structured(self) -> bool:
        return self.smooth is not None


def quantum_riesz_apply(f: SpectralFunction, alpha: float, x: float,
                        tol: float = 1e-10) -> EvalResult:
    """``(-hbar^2 Laplacian)^(alpha/2) psi`` at ``x`` from the momentum representation."""
    if not 0 < alpha <= 2:
        raise InvalidParametersError(f"alpha={alpha} outside (0, 2]")
    hb = f.hbar
    pref = 1.0 / (2 * math.pi * hb)
    total = 0j
    err = 0.0
    conv = True
    diag = {}
    for p0, w in f.atoms:
        total += pref * w * abs(p0) ** alpha * cmath.exp(1j * p0 * x / hb)
    if f.structured:
        g = f.smooth
        osc = []
        for t in f.oscillation:
            t = t if isinstance(t, OscTerm) else OscTerm(*t)
            prob = PVProblem(lambda p: 1.0, (), (t,))
            for c, w in prob.exp_terms():
                osc.append(OscTerm(c, w + x / hb, "exp"))
        if not osc:
            osc = [OscTerm(1.0, x / hb, "exp")]
        prob = PVProblem(lambda p: pref * np.abs(p) ** alpha * g(p), f.poles, tuple(osc),
                         f.decay + alpha, (0.0,))
        r = pv_integrate(prob, tol)
        total += r.value
        err += r.abs_err_estimate
        conv = r.converged
        diag = r.diagnostics
    elif f.phi is not None:
        phi = f.phi

        def integrand(p):
            p = np.asarray(p, dtype=float)
            return pref * np.exp(1j * p * x / hb) * np.abs(p) ** alpha * phi(p)

        r = integrate_adaptive(integrand, -math.inf, math.inf, tol, breakpoints=(0.0,))
        total += r.value
        err += r.abs_err_estimate
        conv = r.converged
        diag = r.diagnostics
    return EvalResult(total, err, conv, "spectral", diag)


@dataclass(frozen=True)
class GridFunction:
    """Uniform samples ``samples[k] = f(start + k * spacing)``."""

    samples: np.ndarray
    spacing: float
    start: float = 0.0
    periodic: bool = False

    def __post_init__(self):
        s = np.asarray(self.samples)
        if s.ndim != 1 or s.size < 4:
            raise InvalidParametersError("need a 1-d grid with at least 4 samples")
        if not self.spacing > 0:
            raise InvalidParametersError("spacing must be positive")
        object.__setattr__(self, "samples", s)

    @classmethod
    def sample(cls, func: Callable, start: float, stop: float, n: int, periodic: bool = False):
        """``n`` samples of ``func`` on ``[start, stop]`` (``stop`` excluded when periodic)."""
        if periodic:
            x = start + (stop - start) * np.arange(n) / n
            h = (stop - start) / n
        else:
            x = np.linspace(start, stop, n)
            h = (stop - start) / (n - 1)
        return cls(np.asarray(func(x)), h, start, periodic)

    @property
    def x(self) -> np.ndarray:
        return self.start + self.spacing * np.arange(self.samples.size)

    @property
    def stop(self) -> float:
        return self.start + self.spacing * (self.samples.size - 1)

    def with_samples(self, samples) -> "GridFunction":
        return GridFunction(np.asarray(samples), self.spacing, self.start, self.periodic)

    def __add__(self, other):
        return self.with_samples(self.samples + other.samples)

    def __mul__(self, c):
        return self.with_samples(self.samples * c)

    __rmul__ = __mul__


def _spectral_multiply(f: GridFunction, symbol: Callable) -> np.ndarray:
    n = f.samples.size
    size = n if f.periodic else 4 * n
    data = f.samples if f.periodic else np.concatenate([f.samples, np.zeros(size - n)])
    spec = np.fft.fft(data)
    power = np.abs(spec) ** 2
    band = np.abs(np.fft.fftfreq(size)) > 0.4
    tot = power.sum()
    if tot > 0 and power[band].sum() > 1e-8 * tot:
        warnings.warn(
            f"{power[band].sum() / tot:.1e} of the spectral mass is near the Nyquist "
            "frequency; refine the grid", AliasingWarning, stacklevel=3)
    omega = 2 * math.pi * np.fft.fftfreq(size, d=f.spacing)
    out = np.fft.ifft(spec * symbol(omega))[:n]
    if np.isrealobj(f.samples):
        out = out.real
    return out


def riesz_apply_grid(f: GridFunction, q_ord: float) -> GridFunction:
    """Riesz derivative of order ``q_ord``: spectrum times ``-|w|**q``.

    Periodic grids use their own discrete spectrum; other grids are zero
    padded to four times their length first. For ``q < 2`` the operator is
    nonlocal, so the padded result is the operator on a circle of
    circumference ``P = 4 n h`` and differs from the whole-line value by
    ``O(P**-2)`` times the integral of ``f``.
    """
    if not 0 < q_ord <= 2:
        raise InvalidParametersError(f"q={q_ord} outside (0, 2]")
    return f.with_samples(_spectral_multiply(f, lambda w: -np.abs(w) ** q_ord))


def quantum_riesz_apply_grid(f: GridFunction, alpha: float, hbar: float = 1.0) -> GridFunction:
    """``(-hbar^2 Laplacian)^(alpha/2)`` on a grid, i.e. ``-hbar^alpha`` times the Riesz derivative."""
    if not 0 < alpha <= 2:
        raise InvalidParametersError(f"alpha={alpha} outside (0, 2]")
    return f.with_samples(_spectral_multiply(f, lambda w: (hbar * np.abs(w)) ** alpha))


# --------------------------------------------------------------------------
# Caputo

def _check_caputo_order(q):
    if not 0 < q < 1:
        raise InvalidParametersError(f"Caputo order {q} outside (0, 1)")


def _l1_point(samples, h, start, q, t):
    x = start + h * np.arange(samples.size)
    slopes = np.diff(samples) / h
    left = x[:-1]
    right = np.minimum(x[1:], t)
    keep = left < t
    e = 1.0 - q
    w = (t - left[keep]) ** e - (t - right[keep]) ** e
    return np.dot(slopes[keep], w) / math.gamma(2.0 - q)


def caputo_derivative(f: GridFunction, q_ord: float, t: float) -> EvalResult:
    """Caputo derivative at ``t`` with lower terminal ``f.start``.

    The samples are joined piecewise linearly and the Caputo integral of that
    interpolant is taken exactly (the L1 scheme, ``O(h^(2-q))``). The error
    estimate compares against the same scheme on every other sample.
    """
    _check_caputo_order(q_ord)
    if not f.start < t <= f.stop + 1e-12 * f.spacing:
        raise OutOfDomainError(f"t={t} outside ({f.start}, {f.stop}]")
    s = f.samples
    val = _l1_point(s, f.spacing, f.start, q_ord, t)
    coarse = s[::2]
    if coarse.size >= 2 and t <= f.start + 2 * f.spacing * (coarse.size - 1):
        val2 = _l1_point(coarse, 2 * f.spacing, f.start, q_ord, t)
        err = abs(val - val2) / (2 ** (2 - q_ord) - 1)
    else:
        err = math.inf
    return EvalResult(val, float(err), bool(np.isfinite(err)), "l1")


def caputo_derivative_grid(f: GridFunction, q_ord: float) -> GridFunction:
    """Caputo derivative at every node (zero at the first)."""
    _check_caputo_order(q_ord)
    inc = np.diff(f.samples)
    hist = l1_history(np.ascontiguousarray(inc), float(q_ord))
    return f.with_samples(hist * f.spacing ** (-q_ord) / math.gamma(2.0 - q_ord))


def laplace_piecewise_linear(f: GridFunction, s: complex) -> complex:
    """``int e^{-s t} f(t) dt`` over the grid, ``f`` linear between nodes, exact."""
    g = f.samples
    h = f.spacing
    t = f.x[:-1]
    w = s * h
    em = np.exp(-w)
    i0 = -np.expm1(-w) / s
    i1 = (1.0 - em * (1.0 + w)) / s ** 2
    d = np.diff(g) / h
    return complex(np.sum(np.exp(-s * t) * (g[:-1] * i0 + d * i1)))


def caputo_laplace_check(f: GridFunction, q_ord: float, s: complex) -> float:
    """Residual of ``L{D^q f}(s) = s^q F(s) - s^(q-1) f(0)`` on the sampled range.

    Both transforms are truncated at the end of the grid, so ``Re(s) * T``
    should be large enough for the neglected tails to be immaterial.
    """
    _check_caputo_order(q_ord)
    s = complex(s)
    if not s.real > 0:
        raise InvalidParametersError("need Re(s) > 0")
    d = caputo_derivative_grid(f, q_ord)
    lhs = laplace_piecewise_linear(d, s)
    rhs = s ** q_ord * laplace_piecewise_linear(f, s) - s ** (q_ord - 1) * f.samples[0]
    return float(abs(lhs - rhs))


def l1_convergence_order(func: Callable, exact: float, q_ord: float, t: float = 1.0,
                         sizes=(250, 500, 1000, 2000, 4000)) -> tuple[float, list[float]]:
    """Observed order of the L1 scheme on ``[0, t]`` from a refinement ladder.

    Returns the least-squares slope of ``log(err)`` against ``log(1/h)`` and
    the individual errors.
    """
    errs, hs = [], []
    for n in sizes:
        g = GridFunction.sample(func, 0.0, t, n + 1)
        errs.append(abs(caputo_derivative(g, q_ord, t).value - exact))
        hs.append(g.spacing)
    slope = np.polyfit(np.log(hs), np.log(errs), 1)[0]
    return float(slope), errs
