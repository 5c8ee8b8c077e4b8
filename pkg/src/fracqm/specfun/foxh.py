"""Fox H-function.

``H^{m,n}_{p,q}(z)`` is the Mellin-Barnes integral ``(1/2 pi i) int h(s) z^-s ds``
with

    h(s) = prod_{j<=m} G(b_j + B_j s) prod_{j<=n} G(1 - a_j - A_j s)
           / prod_{j>n} G(a_j + A_j s) prod_{j>m} G(1 - b_j - B_j s)

The contour keeps the poles of the first product to its left and those of
the second to its right. Two evaluators are provided:

* contour quadrature: trapezoid rule on a parabolic loop opening towards the
  side where the integrand decays super-exponentially (or on a vertical line),
  with node spacing halved until successive sums agree;
* residue series over simple poles, on whichever side converges.

Transformed parameter sets carry their prefactors as metadata, so that a
``FoxHParams`` describes ``coef * x**pf_power * H(scale * x**power)``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from ..errors import (
    ConstraintViolationError,
    ContourPlacementError,
    InvalidParametersError,
    NonConvergenceError,
)
from ..kernels import cloggamma
from ..results import EvalResult

_EPS = np.finfo(float).eps
_SNAP = 1e-12


def _pairs(seq):
    out = []
    for pair in seq:
        a, A = pair
        out.append((complex(a), float(A)))
    return tuple(out)


@dataclass(frozen=True)
class FoxHParams:
    """Index set of an H-function plus the prefactor metadata.

    The represented function of ``x`` is
    ``pf_coef * x**pf_power * H^{m,n}_{p,q}(scale * x**power)``; a bare
    H-function has ``scale=1, power=1, pf_coef=1, pf_power=0``.
    """

    m: int
    n: int
    upper: tuple = ()
    lower: tuple = ()
    scale: complex = 1.0
    power: float = 1.0
    pf_coef: complex = 1.0
    pf_power: complex = 0.0

    def __post_init__(self):
        object.__setattr__(self, "upper", _pairs(self.upper))
        object.__setattr__(self, "lower", _pairs(self.lower))
        p, q = len(self.upper), len(self.lower)
        if not 0 <= self.n <= p:
            raise InvalidParametersError(f"need 0 <= n <= p, got n={self.n}, p={p}")
        if not 1 <= self.m <= q:
            raise InvalidParametersError(f"need 1 <= m <= q, got m={self.m}, q={q}")
        for name, pairs in (("A", self.upper), ("B", self.lower)):
            for j, (_, w) in enumerate(pairs):
                if not w > 0:
                    raise InvalidParametersError(f"{name}_{j + 1} = {w} must be positive")

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def bare(self) -> "FoxHParams":
        return replace(self, scale=1.0, power=1.0, pf_coef=1.0, pf_power=0.0)

    def with_meta(self, **kw) -> "FoxHParams":
        return replace(self, **kw)

    # pole families -------------------------------------------------------
    def left_poles(self, count: int):
        """(location, residue coefficient, lower index) of the first ``count`` poles per factor."""
        out = []
        for j in range(self.m):
            b, B = self.lower[j]
            for k in range(count):
                out.append((-(b + k) / B, (-1) ** k / (math.factorial(k) * B) if k < 170 else 0.0, j, k))
        return out

    def right_poles(self, count: int):
        out = []
        for j in range(self.n):
            a, A = self.upper[j]
            for k in range(count):
                out.append(((1 - a + k) / A, (-1) ** k / (math.factorial(k) * A) if k < 170 else 0.0, j, k))
        return out

    def pole_gap(self) -> tuple[float, float]:
        """Largest real part of a left pole and smallest real part of a right pole."""
        left = max((-(b.real) / B for b, B in self.lower[: self.m]), default=-math.inf)
        right = min(((1 - a.real) / A for a, A in self.upper[: self.n]), default=math.inf)
        return left, right

    def a_star(self) -> float:
        u, l = self.upper, self.lower
        return (sum(A for _, A in u[: self.n]) - sum(A for _, A in u[self.n:])
                + sum(B for _, B in l[: self.m]) - sum(B for _, B in l[self.m:]))

    # kernel --------------------------------------------------------------
    def log_kernel(self, s: np.ndarray) -> np.ndarray:
        """log h(s) on an array; zeros of the denominator give -inf."""
        s = np.asarray(s, dtype=complex)
        acc = np.zeros(s.shape, dtype=complex)
        for j, (b, B) in enumerate(self.lower):
            if j < self.m:
                acc += cloggamma((b + B * s).ravel()).reshape(s.shape)
            else:
                acc -= _log_gamma_den(1 - b - B * s)
        for j, (a, A) in enumerate(self.upper):
            if j < self.n:
                acc += cloggamma((1 - a - A * s).ravel()).reshape(s.shape)
            else:
                acc -= _log_gamma_den(a + A * s)
        return acc

    def kernel(self, s):
        return np.exp(self.log_kernel(s))


def _log_gamma_den(arg: np.ndarray) -> np.ndarray:
    arg = np.asarray(arg, dtype=complex)
    near = np.round(arg.real)
    at_pole = (near <= 0) & (np.abs(arg - near) <= _SNAP * np.maximum(1.0, np.abs(arg)))
    out = cloggamma(np.where(at_pole, 0.5, arg).ravel()).reshape(arg.shape)
    return np.where(at_pole, complex(np.inf), out)


@dataclass(frozen=True)
class ConvergenceProfile:
    mu: float
    beta_star: float
    analytic_domain: str  # all_nonzero_z | disk_of_radius_1_over_beta_star | undetermined
    a_star: float = 0.0

    @property
    def radius(self) -> float:
        if self.analytic_domain == "all_nonzero_z":
            return math.inf
        if self.analytic_domain == "disk_of_radius_1_over_beta_star":
            return 1.0 / self.beta_star
        return math.nan


@dataclass(frozen=True)
class MellinBarnesConfig:
    """Contour quadrature settings.

    ``contour_abscissa`` is where the contour crosses the real axis (``None``
    picks the middle of the pole gap). ``truncation_height`` and
    ``node_count`` fix the truncated range and the initial node count;
    ``None`` sizes them automatically. ``contour`` is ``'auto'``, ``'line'``
    or ``'loop'``.
    """

    contour_abscissa: float | None = None
    truncation_height: float | None = None
    node_count: int | None = None
    target_abs_err: float = 1e-12
    contour: str = "auto"
    loop_curvature: float | None = None
    max_nodes: int = 400_000

    def __post_init__(self):
        if self.target_abs_err <= 0:
            raise InvalidParametersError("target_abs_err must be positive")
        if self.truncation_height is not None and self.truncation_height <= 0:
            raise InvalidParametersError("truncation_height must be positive")
        if self.node_count is not None and self.node_count < 1:
            raise InvalidParametersError("node_count must be positive")
        if self.contour not in ("auto", "line", "loop"):
            raise InvalidParametersError(f"unknown contour kind {self.contour!r}")


def _coincidence(h: FoxHParams):
    for hi in range(h.m):
        b, B = h.lower[hi]
        for j in range(h.n):
            a, A = h.upper[j]
            # A(b + nu) = B(a - lam - 1)  <=>  nu = B(a - lam - 1)/A - b
            lam_max = (B * (a.real - 1) / A - b.real) * A / B
            lam = 0
            while lam <= lam_max + 1e-9:
                nu = B * (a - lam - 1) / A - b
                if abs(nu.imag) < 1e-10 and nu.real > -1e-10 and abs(nu.real - round(nu.real)) < 1e-10:
                    return hi, j, int(round(nu.real)), lam
                lam += 1
    return None


def foxh_validate(h: FoxHParams) -> ConvergenceProfile:
    """Check the pole-separation condition and classify the analytic domain.

    Raises
    ------
    InvalidParametersError
        A pole of ``Gamma(b_h + B_h s)`` coincides with a pole of
        ``Gamma(1 - a_j - A_j s)``.
    """
    hit = _coincidence(h)
    if hit is not None:
        hi, j, nu, lam = hit
        raise InvalidParametersError(
            f"non-coincidence condition violated: A_{j + 1}(b_{hi + 1}+{nu}) = "
            f"B_{hi + 1}(a_{j + 1}-{lam}-1), pole families overlap")
    mu = sum(B for _, B in h.lower) - sum(A for _, A in h.upper)
    logb = sum(A * math.log(A) for _, A in h.upper) - sum(B * math.log(B) for _, B in h.lower)
    if abs(mu) < 1e-14:
        mu = 0.0
    if mu > 0:
        dom = "all_nonzero_z"
    elif mu == 0:
        dom = "disk_of_radius_1_over_beta_star"
    else:
        dom = "undetermined"
    return ConvergenceProfile(mu, math.exp(logb), dom, h.a_star())


# --------------------------------------------------------------------------
# contour quadrature

_CURVATURES = (0.05, 0.1, 0.2, 0.5, 1.0)


class _Contour:
    """s(u) = c + side * kappa * u**2 + i u; side -1 opens left, +1 right, 0 is a line."""

    def __init__(self, c, side, kappa):
        self.c, self.side, self.kappa = c, side, kappa if side else 0.0

    def s(self, u):
        return self.c + self.side * self.kappa * u * u + 1j * u

    def ds(self, u):
        return 2 * self.side * self.kappa * u + 1j

    def strip(self, poles) -> float:
        """Distance in the parameter plane from the real u-axis to the nearest pole image."""
        d = math.inf
        for P in poles:
            if self.side == 0:
                roots = [(P - self.c) / 1j]
            else:
                A = self.side * self.kappa
                disc = cmath.sqrt(-1 - 4 * A * (self.c - P))
                roots = [(-1j + disc) / (2 * A), (-1j - disc) / (2 * A)]
            for r in roots:
                d = min(d, abs(r.imag))
        return d


def _choose_contour(h, prof, z, cfg):
    left, right = h.pole_gap()
    if not left < right:
        raise ContourPlacementError(
            f"no abscissa separates the pole families (left poles up to {left}, "
            f"right poles from {right})")
    if cfg.contour_abscissa is not None:
        c = float(cfg.contour_abscissa)
        if not left < c < right:
            raise ContourPlacementError(
                f"abscissa {c} does not lie in the pole gap ({left}, {right})")
    elif math.isinf(right):
        c = left + 0.5
    else:
        c = 0.5 * (left + right)
    kind = cfg.contour
    if kind == "auto":
        kind = "line" if prof.mu == 0 else "loop"
    if kind == "line":
        return c, 0
    if prof.mu == 0:
        raise ContourPlacementError("loop contours need mu != 0")
    return c, (-1 if prof.mu > 0 else 1)


def _near_poles(h, count=8):
    return [p[0] for p in h.left_poles(count)] + [p[0] for p in h.right_poles(count)]


def _integrand(h, logz, contour):
    def f(u):
        s = contour.s(u)
        return np.exp(h.log_kernel(s) - s * logz) * contour.ds(u)
    return f


def _trapezoid(h, logz, contour, tol, cfg, n_init=None, height=None):
    f = _integrand(h, logz, contour)
    d = contour.strip(_near_poles(h))
    step = min(0.5, d / 2) if math.isfinite(d) else 0.5
    if n_init is not None and height is not None:
        step = height / n_init
    # march outward until the tail is negligible
    if height is None:
        U = 8.0
        while True:
            tail = np.abs(f(np.array([-U, -0.9 * U, 0.9 * U, U])))
            tail = np.where(np.isfinite(tail), tail, np.inf)
            if tail.max() * U < tol / 10:
                break
            U *= 1.5
            if U / step > cfg.max_nodes:
                raise NonConvergenceError(
                    "Mellin-Barnes integrand does not decay along the contour",
                    {"height": U, "tail": float(tail.max())})
    else:
        U = float(height)
    n = max(4, int(math.ceil(U / step)))
    step = U / n
    u = step * np.arange(-n, n + 1)
    vals = f(u)
    total = vals.sum() * step
    mag = np.abs(vals).sum() * step
    levels = 0
    diff = math.inf
    while True:
        if 2 * len(u) > cfg.max_nodes:
            break
        mid = u[:-1] + 0.5 * step
        mv = f(mid)
        new_total = 0.5 * total + mv.sum() * step * 0.5
        mag = 0.5 * mag + np.abs(mv).sum() * step * 0.5
        diff = abs(new_total - total)
        total = new_total
        u = np.sort(np.concatenate([u, mid]))
        step *= 0.5
        levels += 1
        if diff <= tol / 2 and levels >= 2:
            break
    if not np.isfinite(total):
        raise NonConvergenceError("non-finite Mellin-Barnes sum", {"height": U})
    roundoff = 16 * _EPS * mag
    err = diff + roundoff
    value = total / (2j * math.pi)
    return value, err / (2 * math.pi), {"height": U, "nodes": len(u), "levels": levels,
                                         "peak_sum": mag / (2 * math.pi), "step": step}


def _contour_eval(h, prof, z, cfg):
    c, side = _choose_contour(h, prof, z, cfg)
    logz = cmath.log(z)
    tol = cfg.target_abs_err * 2 * math.pi
    if side == 0:
        contour = _Contour(c, 0, 0.0)
    elif cfg.loop_curvature is not None:
        contour = _Contour(c, side, cfg.loop_curvature)
    else:
        # curvature that keeps the integrand smallest (least cancellation)
        best = None
        for kappa in _CURVATURES:
            cand = _Contour(c, side, kappa)
            f = _integrand(h, logz, cand)
            uu = np.linspace(-12 / math.sqrt(kappa), 12 / math.sqrt(kappa), 241)
            with np.errstate(all="ignore"):
                peak = np.nanmax(np.abs(f(uu)))
            score = peak * (1.0 + 1.0 / math.sqrt(kappa)) if np.isfinite(peak) else math.inf
            if best is None or score < best[0]:
                best = (score, cand)
        contour = best[1]
    value, err, diag = _trapezoid(h, logz, contour, tol, cfg, cfg.node_count, cfg.truncation_height)
    diag.update({"abscissa": c, "shape": {-1: "left_loop", 0: "line", 1: "right_loop"}[side],
                 "curvature": contour.kappa})
    conv = err <= max(cfg.target_abs_err, 1e-15)
    return EvalResult(value, err, conv, "contour", diag)


# --------------------------------------------------------------------------
# residue series

def _series_side(prof, z):
    if prof.mu > 0:
        return "left"
    if prof.mu < 0:
        return "right"
    return "left" if abs(z) < 1.0 / prof.beta_star else "right"


def _series_eval(h, prof, z, tol, side=None):
    side = side or _series_side(prof, z)
    logz = cmath.log(z)
    count = 40
    while True:
        poles = h.left_poles(count) if side == "left" else h.right_poles(count)
        if not poles:
            return EvalResult(0.0, 0.0, True, "series", {"side": side, "terms": 0})
        loc = np.array([p[0] for p in poles])
        order = np.argsort(-loc.real if side == "left" else loc.real, kind="stable")
        loc = loc[order]
        if np.any(np.abs(np.diff(loc)) < 1e-9 * np.maximum(1.0, np.abs(loc[1:]))):
            raise InvalidParametersError("coincident poles: residue series unavailable")
        coef = np.array([poles[i][1] for i in order], dtype=float)
        owner = np.array([poles[i][2] for i in order])
        logs = np.zeros(len(loc), dtype=complex)
        for j, (b, B) in enumerate(h.lower):
            arg = b + B * loc
            if j < h.m:
                mask = owner != j if side == "left" else np.ones(len(loc), bool)
                lg = cloggamma(arg.astype(complex))
                if np.any(~np.isfinite(lg[mask])):
                    raise InvalidParametersError("coincident poles: residue series unavailable")
                logs[mask] += lg[mask]
            else:
                logs -= _log_gamma_den(1 - arg)
        for j, (a, A) in enumerate(h.upper):
            arg = a + A * loc
            if j < h.n:
                mask = owner != j if side == "right" else np.ones(len(loc), bool)
                lg = cloggamma((1 - arg).astype(complex))
                if np.any(~np.isfinite(lg[mask])):
                    raise InvalidParametersError("coincident poles: residue series unavailable")
                logs[mask] += lg[mask]
            else:
                logs -= _log_gamma_den(arg)
        with np.errstate(over="ignore", invalid="ignore"):
            terms = coef * np.exp(logs - loc * logz)
        terms = np.where(coef == 0, 0.0, terms)
        mags = np.abs(terms)
        if not np.all(np.isfinite(mags)):
            raise NonConvergenceError("residue series overflowed", {"side": side})
        tail = mags[-max(4, len(mags) // 10):].max()
        total = terms.sum()
        scale = max(abs(total), 1.0)
        if tail <= 1e-3 * tol or tail <= 1e-17 * scale:
            # each term is exp of a sum of O(|logs|) quantities: relative error ~ eps * |exponent|
            noise = 8 * _EPS * np.sum(mags * (1.0 + np.abs(logs) + np.abs(loc * logz)))
            err = float(tail * 10 + noise)
            return EvalResult(complex(total), err, err <= tol, "series",
                              {"side": side, "terms": len(terms), "peak": float(mags.max())})
        if count >= 1280:
            raise NonConvergenceError("residue series did not converge",
                                      {"side": side, "terms": len(terms), "tail": float(tail)})
        count *= 2


def foxh_eval(h: FoxHParams, z: complex, cfg: MellinBarnesConfig | None = None,
              method: str = "contour") -> EvalResult:
    """Evaluate the bare H-function at ``z`` (metadata ignored).

    ``method`` is ``'contour'``, ``'series'`` or ``'both'``; with ``'both'``
    the two evaluations are cross-checked and the more accurate one returned,
    with the disagreement in ``diagnostics['method_gap']``.
    """
    cfg = cfg or MellinBarnesConfig()
    z = complex(z)
    if z == 0:
        raise InvalidParametersError("z must be non-zero")
    prof = foxh_validate(h)
    if method == "contour":
        return _contour_eval(h, prof, z, cfg)
    if method == "series":
        return _series_eval(h, prof, z, cfg.target_abs_err)
    if method != "both":
        raise InvalidParametersError(f"unknown method {method!r}")
    rc = _contour_eval(h, prof, z, cfg)
    try:
        rs = _series_eval(h, prof, z, cfg.target_abs_err)
    except (InvalidParametersError, NonConvergenceError):
        return rc
    gap = abs(rc.value - rs.value)
    best = rs if rs.abs_err < rc.abs_err else rc
    diag = dict(best.diagnostics)
    diag["method_gap"] = gap
    agree = gap <= 2 * (rc.abs_err + rs.abs_err) + 1e-14 * abs(best.value)
    return EvalResult(best.value, max(best.abs_err, gap if not agree else 0.0),
                      best.converged and agree, best.method, diag)


def foxh_value(h: FoxHParams, x: complex, cfg: MellinBarnesConfig | None = None,
               method: str = "contour") -> EvalResult:
    """``pf_coef * x**pf_power * H(scale * x**power)`` with principal powers."""
    x = complex(x)
    lx = cmath.log(x)
    arg = h.scale * cmath.exp(h.power * lx)
    r = foxh_eval(h, arg, cfg, method)
    pref = h.pf_coef * cmath.exp(h.pf_power * lx)
    return EvalResult(pref * r.value, abs(pref) * r.abs_err, r.converged, r.method,
                      r.diagnostics)


# --------------------------------------------------------------------------
# parameter transformations

def _same(p, q):
    return abs(p[0] - q[0]) < 1e-14 and abs(p[1] - q[1]) < 1e-14


def _times_gamma(h: FoxHParams, rho: complex, tau: float) -> FoxHParams:
    """Multiply the kernel by Gamma(rho - tau w)."""
    if tau > 0:
        pair = (1 - rho, tau)  # appears as Gamma(1 - a - A w)
        for j in range(h.m, h.q):
            if _same(h.lower[j], pair):
                lower = h.lower[:j] + h.lower[j + 1:]
                return replace(h, lower=lower)
        return replace(h, n=h.n + 1, upper=(pair,) + h.upper)
    pair = (rho, -tau)  # Gamma(b + B w)
    for j in range(h.n, h.p):
        if _same(h.upper[j], pair):
            return replace(h, upper=h.upper[:j] + h.upper[j + 1:])
    return replace(h, m=h.m + 1, lower=(pair,) + h.lower)


def _over_gamma(h: FoxHParams, rho: complex, tau: float) -> FoxHParams:
    """Divide the kernel by Gamma(rho + tau w)."""
    if tau > 0:
        pair = (rho, tau)  # Gamma(a + A w) in the denominator
        for j in range(h.m):
            if _same(h.lower[j], pair) and h.m > 1:
                return replace(h, m=h.m - 1, lower=h.lower[:j] + h.lower[j + 1:])
        return replace(h, upper=h.upper + (pair,))
    pair = (1 - rho, -tau)  # Gamma(1 - b - B w) in the denominator
    for j in range(h.n):
        if _same(h.upper[j], pair):
            return replace(h, n=h.n - 1, upper=h.upper[:j] + h.upper[j + 1:])
    return replace(h, lower=h.lower + (pair,))


def foxh_laplace(h: FoxHParams, rho: complex, sigma: float) -> FoxHParams:
    """Laplace transform of ``x**(rho-1) * H(a x**sigma)``.

    ``h`` must describe exactly that function (``pf_power == rho - 1`` and
    ``|power| == sigma``). The result describes ``s**-rho * H'(a s**-sigma)``.
    A lower denominator pair ``(1 - rho, sigma)`` is cancelled when present,
    otherwise ``(1 - rho, sigma)`` joins the upper numerator pairs.

    Raises
    ------
    ConstraintViolationError
        ``sigma <= 0``, the integral diverges at the origin, or ``arg a`` is
        outside the sector where the H-function decays.
    """
    rho = complex(rho)
    if not sigma > 0:
        raise ConstraintViolationError("Laplace transform needs sigma > 0")
    if abs(abs(h.power) - sigma) > 1e-12 or abs(h.pf_power - (rho - 1)) > 1e-12:
        raise ConstraintViolationError(
            "parameter metadata must describe x**(rho-1) * H(a x**sigma)")
    tau = h.power
    lo = min((b.real / B for b, B in h.lower[: h.m]))
    if tau > 0 and not rho.real + sigma * lo > 0:
        raise ConstraintViolationError(
            f"integral diverges at the origin: Re(rho) + sigma*min(b_j/B_j) = "
            f"{rho.real + sigma * lo} <= 0")
    astar = h.a_star()
    arg = abs(cmath.phase(h.scale))
    if tau > 0 and not (astar > 0 and arg < 0.5 * math.pi * astar):
        raise ConstraintViolationError(
            f"argument condition |arg a| < pi*a*/2 fails (|arg a|={arg}, a*={astar})")
    out = _times_gamma(h, rho, tau)
    return replace(out, power=-tau, pf_power=-rho, pf_coef=h.pf_coef, scale=h.scale)


def foxh_inverse_laplace(h: FoxHParams, rho: complex, sigma: float) -> FoxHParams:
    """Inverse Laplace transform of ``s**-rho * H(a s**sigma)``.

    The result describes ``x**(rho-1) * H'(a x**-sigma)``; the upper
    denominator pair ``(rho, sigma)`` is appended (or its counterpart
    cancelled when the transform undoes :func:`foxh_laplace`).
    """
    rho = complex(rho)
    if not sigma > 0:
        raise ConstraintViolationError("inverse Laplace transform needs sigma > 0")
    if abs(abs(h.power) - sigma) > 1e-12 or abs(h.pf_power + rho) > 1e-12:
        raise ConstraintViolationError(
            "parameter metadata must describe s**-rho * H(a s**sigma)")
    tau = h.power
    out = _over_gamma(h, rho, tau)
    return replace(out, power=-tau, pf_power=rho - 1, pf_coef=h.pf_coef, scale=h.scale)


def foxh_rl_derivative(h: FoxHParams, a_exp: float, b_exp: float, beta_ord: float,
                       c_scale: float) -> FoxHParams:
    """Riemann-Liouville derivative of order ``beta_ord`` of ``z**a * H((c z)**b)``.

    Returns ``z**(a - beta) * H^{m,n+1}_{p+1,q+1}((c z)**b)`` with ``(-a, b)``
    prepended to the upper pairs and ``(beta - a, b)`` appended to the lower.

    Raises
    ------
    ConstraintViolationError
        Unless ``a, b, c > 0`` and ``a + b * min(b_j / B_j) > -1``.
    """
    if not (a_exp > 0 and b_exp > 0):
        raise ConstraintViolationError("need a > 0 and b > 0")
    if not c_scale > 0:
        raise ConstraintViolationError("need c > 0")
    lo = min(b.real / B for b, B in h.lower[: h.m])
    if not a_exp + b_exp * lo > -1:
        raise ConstraintViolationError(
            f"a + b*min(b_j/B_j) = {a_exp + b_exp * lo} must exceed -1")
    out = replace(h, n=h.n + 1, upper=((-a_exp, b_exp),) + h.upper,
                  lower=h.lower + ((beta_ord - a_exp, b_exp),))
    return replace(out, scale=c_scale ** b_exp, power=b_exp, pf_power=a_exp - beta_ord,
                   pf_coef=h.pf_coef)
