"""Quadrature engines.

* :func:`integrate_adaptive` -- globally adaptive Gauss-Kronrod (7/15) with
  interval bisection; infinite limits are mapped to finite ones.
* :func:`oscillatory_tail` -- integrals of ``envelope(q) * cos/sin/exp(i w q)``
  over ``[start, inf)``, summed half-period by half-period and accelerated
  with the Levin u-transform.
* :func:`pv_integrate` -- Cauchy principal value over the real line for
  integrands with simple real poles, by singularity subtraction around each
  pole and oscillatory tails beyond the outermost one.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import NonAlternatingError, NonConvergenceError, PoleTooCloseError
from .results import QuadResult

_EPS = np.finfo(float).eps

# Kronrod 15 / Gauss 7 (QUADPACK qk15)
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KW = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GW = np.zeros(15)
# Gauss nodes are the odd-indexed Kronrod abscissae (1,3,5 and centre)
for _i, _w in zip((1, 3, 5), _WG[:3]):
    _GW[_i] = _w
    _GW[14 - _i] = _w
_GW[7] = _WG[3]


def _as_vector_fn(f: Callable) -> Callable:
    def g(x):
        y = f(x)
        y = np.asarray(y)
        if y.shape != x.shape:
            y = np.array([f(float(xi)) for xi in x])
        return y
    return g


def _gk15(f, a, b):
    c = 0.5 * (a + b)
    hl = 0.5 * (b - a)
    y = f(c + hl * _NODES)
    k = hl * np.dot(_KW, y)
    g = hl * np.dot(_GW, y)
    mean = k / (2 * hl) if hl != 0 else 0.0
    resabs = abs(hl) * np.dot(_KW, np.abs(y))
    resasc = abs(hl) * np.dot(_KW, np.abs(y - mean))
    err = abs(k - g)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > np.finfo(float).tiny / (50 * _EPS):
        err = max(50 * _EPS * resabs, err)
    return k, err, resabs


def _mapped(f, a, b):
    """Map an (semi-)infinite interval onto a finite one."""
    if math.isinf(a) and math.isinf(b):
        raise ValueError("split doubly infinite ranges before mapping")
    if math.isinf(b):
        def g(t):
            x = a + t / (1.0 - t)
            return f(x) / (1.0 - t) ** 2
        return g, 0.0, 1.0
    if math.isinf(a):
        def g(t):
            x = b - t / (1.0 - t)
            return f(x) / (1.0 - t) ** 2
        return g, 0.0, 1.0
    return f, a, b


def integrate_adaptive(f: Callable, a: float, b: float, tol: float = 1e-10, *,
                       breakpoints: Sequence[float] = (), max_intervals: int = 4000,
                       raise_on_failure: bool = True) -> QuadResult:
    """Integrate ``f`` over ``[a, b]`` to absolute tolerance ``tol``.

    ``f`` should accept a numpy array; scalar-only callables are detected and
    looped over. Either limit may be infinite. ``breakpoints`` are interior
    points where ``f`` is not smooth.

    Raises
    ------
    NonConvergenceError
        If the interval budget is exhausted before the error estimate drops
        below ``tol``; ``diagnostics['worst_interval']`` names the culprit.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    fv = _as_vector_fn(f)
    sign = 1.0
    if b < a:
        a, b, sign = b, a, -1.0
    if a == b:
        return QuadResult(0.0, 0.0, 0, True)
    pts = [a] + sorted(p for p in breakpoints if a < p < b) + [b]
    if math.isinf(a) and math.isinf(b) and len(pts) == 2:
        pts = [a, 0.0, b]
    heap = []
    total = 0.0
    total_err = 0.0
    mass = 0.0
    counter = 0
    for lo, hi in zip(pts[:-1], pts[1:]):
        g, ta, tb = _mapped(fv, lo, hi)
        val, err, rabs = _gk15(g, ta, tb)
        total += val
        total_err += err
        mass += rabs
        heapq.heappush(heap, (-err, counter, ta, tb, val, err, 0, g))
        counter += 1
    depth = 0
    # below this the estimate is rounding noise and bisection cannot help
    floor = lambda: 200 * _EPS * mass
    while total_err > max(tol, floor()) and len(heap) < max_intervals:
        _, _, lo, hi, val, err, lvl, g = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            heapq.heappush(heap, (0.0, counter, lo, hi, val, err, lvl, g))
            counter += 1
            break
        v1, e1, _ = _gk15(g, lo, mid)
        v2, e2, _ = _gk15(g, mid, hi)
        total += v1 + v2 - val
        total_err += e1 + e2 - err
        depth = max(depth, lvl + 1)
        heapq.heappush(heap, (-e1, counter, lo, mid, v1, e1, lvl + 1, g))
        heapq.heappush(heap, (-e2, counter + 1, mid, hi, v2, e2, lvl + 1, g))
        counter += 2
    # recompute the sums to shed accumulated rounding
    total = sum(item[4] for item in heap)
    total_err = sum(item[5] for item in heap)
    converged = total_err <= max(tol, floor())
    diag = {"intervals": len(heap)}
    if not converged:
        worst = min(heap)
        diag["worst_interval"] = (worst[2], worst[3])
        diag["worst_error"] = worst[5]
        if raise_on_failure:
            raise NonConvergenceError(
                f"adaptive quadrature stalled at error {total_err:.3e} > {tol:.3e}",
                {"value": sign * total, "abs_err": total_err, **diag})
    return QuadResult(sign * total, float(total_err), depth, converged, diag)


# --------------------------------------------------------------------------
# oscillatory tails

def _levin_u(partial: np.ndarray, terms: np.ndarray, n0: int, k: int) -> complex:
    j = np.arange(k + 1)
    binom = np.array([math.comb(k, jj) for jj in j], dtype=float)
    ratio = ((n0 + j + 1.0) / (n0 + k + 1.0)) ** (k - 1)
    w = (n0 + j + 1.0) * terms[n0 + j]
    coef = (-1.0) ** j * binom * ratio / w
    return complex(np.dot(coef, partial[n0 + j]) / coef.sum())


def _half_period_zeros(omega: float, start: float, kind: str, count: int) -> np.ndarray:
    offset = 0.5 * math.pi if kind == "cos" else 0.0
    k0 = math.ceil((omega * start - offset) / math.pi)
    if (k0 * math.pi + offset) / omega <= start:
        k0 += 1
    return (np.arange(k0, k0 + count) * math.pi + offset) / omega


def _tail_one(envelope, omega, start, tol, kind, max_terms):
    if kind == "cos":
        osc = np.cos
    else:
        osc = np.sin
    env = _as_vector_fn(envelope)

    def integrand(q):
        return env(q) * osc(omega * q)

    zeros = _half_period_zeros(omega, start, kind, max_terms)
    edges = np.concatenate([[start], zeros])
    term_tol = max(tol * 1e-3, 1e-17)
    terms = []
    partial = []
    acc = 0.0
    best = None
    prev = None
    n0 = 2
    history = []
    for i in range(max_terms):
        r = integrate_adaptive(integrand, edges[i], edges[i + 1], term_tol,
                               raise_on_failure=False)
        terms.append(r.value)
        acc = acc + r.value
        partial.append(acc)
        n = len(terms)
        if n >= 4 and max(abs(t) for t in terms) <= 1e-3 * term_tol:
            # envelope negligible at this tolerance (or identically zero)
            return QuadResult(acc, n * 1e-3 * term_tol, 0, True, {"terms": n})
        k = n - 1 - n0
        if k < 2:
            continue
        if k > 16:
            n0 += 1
            k = 16
        tarr = np.asarray(terms)
        if np.any(tarr[n0:n0 + k + 1] == 0):
            continue
        est = _levin_u(np.asarray(partial), tarr, n0, k)
        if prev is not None:
            diff = abs(est - prev)
            history.append(diff)
            if len(history) >= 2 and history[-1] <= tol / 4 and history[-2] <= tol / 2:
                best = (est, max(history[-1], history[-2]))
                break
        prev = est
    tarr = np.asarray(terms)
    seg = tarr[n0:]
    if len(seg) > 3:
        seg = seg[seg != 0]
        flips = np.real(seg[1:] * np.conj(seg[:-1])) < 0
        if flips.size and flips.mean() < 0.9:
            raise NonAlternatingError(
                f"only {flips.mean():.0%} of half-period contributions alternate")
    if best is None:
        raise NonConvergenceError(
            "oscillatory tail acceleration did not settle",
            {"value": prev, "terms": len(terms),
             "last_diffs": history[-3:]})
    return QuadResult(best[0], float(best[1]) + len(terms) * term_tol, len(terms), True,
                      {"terms": len(terms)})


def oscillatory_tail(envelope: Callable, frequency: float, start: float, tol: float = 1e-10,
                     kind: str = "cos", max_terms: int = 400) -> QuadResult:
    """Integral of ``envelope(q) * osc(frequency * q)`` over ``[start, inf)``.

    ``kind`` is ``'cos'``, ``'sin'`` or ``'exp'`` (``exp(i w q)``). The
    envelope should be smooth and monotone in modulus beyond ``start``. An
    envelope that tends to a constant is summed in the Abel sense.

    Raises
    ------
    NonAlternatingError
        Consecutive half-period contributions fail to change sign.
    NonConvergenceError
        The accelerated sums do not settle within ``max_terms`` half periods.
    """
    if kind not in ("cos", "sin", "exp"):
        raise ValueError(f"unknown oscillation kind {kind!r}")
    if frequency == 0.0:
        if kind == "sin":
            return QuadResult(0.0, 0.0, 0, True)
        return integrate_adaptive(envelope, start, math.inf, tol)
    sgn = 1.0 if frequency > 0 else -1.0
    w = abs(frequency)
    if kind == "cos":
        return _tail_one(envelope, w, start, tol, "cos", max_terms)
    if kind == "sin":
        return _tail_one(envelope, w, start, tol, "sin", max_terms).scaled(sgn)
    rc = _tail_one(envelope, w, start, tol / 2, "cos", max_terms)
    rs = _tail_one(envelope, w, start, tol / 2, "sin", max_terms)
    return rc + rs.scaled(1j * sgn)


# --------------------------------------------------------------------------
# principal values

@dataclass(frozen=True)
class OscTerm:
    """``coef * cos(w q)``, ``coef * sin(w q)`` or ``coef * exp(i w q)``."""

    coef: complex
    frequency: float
    kind: str = "exp"


@dataclass(frozen=True)
class PVProblem:
    """Integrand ``smooth_part(q) * sum(oscillation) / prod(q - pole)``.

    ``tail_exponent`` is the algebraic decay rate of
    ``|smooth_part(q)| / prod|q - pole|`` at large ``|q|``; zero means the
    tail is summed in the Abel sense. ``breakpoints`` lists points where
    ``smooth_part`` is not smooth (for instance ``0`` for ``|q|**alpha``).
    """

    smooth_part: Callable
    poles: tuple = ()
    oscillation: tuple = ()
    tail_exponent: float = -1.0
    breakpoints: tuple = ()

    def __post_init__(self):
        poles = tuple(sorted(float(p) for p in self.poles))
        object.__setattr__(self, "poles", poles)
        object.__setattr__(self, "oscillation", tuple(
            t if isinstance(t, OscTerm) else OscTerm(*t) for t in self.oscillation))
        if len(set(poles)) != len(poles):
            raise PoleTooCloseError("poles must be distinct")
        if self.tail_exponent > 0:
            raise ValueError("tail_exponent must be <= 0 for a convergent tail")

    def scaled(self, c: complex) -> "PVProblem":
        g = self.smooth_part
        return PVProblem(lambda q: c * g(q), self.poles, self.oscillation,
                         self.tail_exponent, self.breakpoints)

    def exp_terms(self) -> list[tuple[complex, float]]:
        out = []
        for t in self.oscillation:
            if t.kind == "exp":
                out.append((t.coef, t.frequency))
            elif t.kind == "cos":
                out += [(t.coef / 2, t.frequency), (t.coef / 2, -t.frequency)]
            elif t.kind == "sin":
                out += [(t.coef / 2j, t.frequency), (-t.coef / 2j, -t.frequency)]
            else:
                raise ValueError(f"unknown oscillation kind {t.kind!r}")
        return out or [(1.0, 0.0)]

    def oscillator(self, q):
        q = np.asarray(q, dtype=float)
        acc = np.zeros(q.shape, dtype=complex)
        for c, w in self.exp_terms():
            acc += c * np.exp(1j * w * q)
        return acc

    def pole_product(self, q, skip=None):
        q = np.asarray(q, dtype=float)
        prod = np.ones(q.shape)
        for i, p in enumerate(self.poles):
            if i != skip:
                prod = prod * (q - p)
        return prod

    def __call__(self, q):
        q = np.asarray(q, dtype=float)
        return self.smooth_part(q) * self.oscillator(q) / self.pole_product(q)

    def numerator(self, k: int) -> Callable:
        """``(q - pole_k) * integrand(q)`` evaluated without the pole factor."""
        def n(q):
            q = np.asarray(q, dtype=float)
            return self.smooth_part(q) * self.oscillator(q) / self.pole_product(q, skip=k)
        return n


def residue_numerator(f: Callable, q0: float, h: float, levels: int = 4) -> complex:
    """Richardson-extrapolated symmetric limit of ``(q - q0) f(q)`` at ``q0``."""
    row = []
    for i in range(levels):
        hi = h / 2 ** i
        fp = complex(np.asarray(f(np.array([q0 + hi])))[0])
        fm = complex(np.asarray(f(np.array([q0 - hi])))[0])
        row.append(0.5 * hi * (fp - fm))
    # error expands in even powers of h
    for m in range(1, levels):
        fac = 4.0 ** m
        row = [(fac * row[i + 1] - row[i]) / (fac - 1.0) for i in range(len(row) - 1)]
    return row[0]


def pv_integrate(p: PVProblem, tol: float = 1e-10, window: float | None = None,
                 tail_split: float = 3.0) -> QuadResult:
    """Cauchy principal value of ``p`` over the real line.

    Around each pole ``q0`` the window ``[q0 - d, q0 + d]`` is folded onto
    ``[0, d]`` after subtracting ``c / (q - q0)``, where ``c`` is the residue
    numerator; that subtracted term integrates to zero over the symmetric
    window. Beyond ``tail_split`` pole spacings past the outermost pole the
    integral is handed to :func:`oscillatory_tail`.

    Raises
    ------
    PoleTooCloseError
        Two poles lie within one exclusion window.
    NonConvergenceError, NonAlternatingError
        Propagated from the sub-integrations.
    """
    poles = p.poles
    if len(poles) > 1:
        spacing = float(np.min(np.diff(poles)))
        scale = max(1.0, max(abs(x) for x in poles))
        if spacing < 1e-8 * scale:
            raise PoleTooCloseError(f"poles {spacing:.1e} apart cannot be separated")
    else:
        spacing = 1.0
    if window is None:
        window = min(0.5, spacing / 3.0)
    elif len(poles) > 1 and 2.0 * window >= spacing:
        raise PoleTooCloseError(
            f"exclusion window {window} overlaps neighbouring poles (spacing {spacing})")
    if poles:
        lo_edge = poles[0] - tail_split * spacing
        hi_edge = poles[-1] + tail_split * spacing
    else:
        lo_edge, hi_edge = -1.0, 1.0
    bps = [b for b in p.breakpoints]
    if bps:
        lo_edge = min(lo_edge, min(bps) - 1.0)
        hi_edge = max(hi_edge, max(bps) + 1.0)

    npieces = 2 * len(poles) + 2 * len(p.exp_terms()) + 1
    piece_tol = tol / npieces
    total = QuadResult(0.0, 0.0, 0, True, {"pieces": 0})
    residues = []

    for k, q0 in enumerate(poles):
        num = p.numerator(k)
        c = residue_numerator(num, q0, window / 4.0)
        residues.append(c)

        def folded(u, num=num, q0=q0, c=c):
            u = np.asarray(u, dtype=float)
            return ((num(q0 + u) - c) - (num(q0 - u) - c)) / u

        total = total + integrate_adaptive(folded, 0.0, window, piece_tol)

    # regular stretches between windows, split at breakpoints
    cuts = [lo_edge]
    for q0 in poles:
        cuts += [q0 - window, None, q0 + window]
    cuts.append(hi_edge)
    segments = []
    it = iter(cuts)
    seg_start = next(it)
    for c in it:
        if c is None:
            seg_start = next(it)
            continue
        segments.append((seg_start, c))
    for a, b in segments:
        if b <= a:
            continue
        inner = [x for x in bps if a < x < b]
        total = total + integrate_adaptive(p, a, b, piece_tol, breakpoints=inner)

    g = p.smooth_part
    for coef, w in p.exp_terms():
        def env_r(q, coef=coef):
            q = np.asarray(q, dtype=float)
            return coef * g(q) / p.pole_product(q)

        def env_l(u, coef=coef):
            u = np.asarray(u, dtype=float)
            return coef * g(-u) / p.pole_product(-u)

        total = total + oscillatory_tail(env_r, w, hi_edge, piece_tol, kind="exp")
        total = total + oscillatory_tail(env_l, -w, -lo_edge, piece_tol, kind="exp")

    diag = dict(total.diagnostics)
    diag.update({"window": window, "residue_numerators": residues,
                 "tail_split": (lo_edge, hi_edge)})
    return QuadResult(total.value, total.abs_err_estimate, total.refinement_levels,
                      total.converged, diag)
