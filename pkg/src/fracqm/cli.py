"""Command-line front end.

``fracqm run CONFIG`` executes a JSON experiment and writes ``<output>.csv``
plus a ``<output>.json`` summary. ``fracqm eval KIND ...`` prints a single
value and its error estimate. Exit codes: 0 when everything converged,
2 on convergence failure, 1 on configuration errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__, freeparticle, quadrature, validation, well
from .errors import FracQMError, NonConvergenceError
from .fracops import GridFunction
from .specfun import foxh
from .specfun.gamma import gamma_complex, loggamma
from .specfun.mittag_leffler import mittag_leffler

EXIT_OK, EXIT_CONFIG, EXIT_CONVERGENCE = 0, 1, 2
_REQUIRED = object()


class ConfigError(Exception):
    def __init__(self, field: str, constraint: str):
        super().__init__(f"{field}: {constraint}")
        self.field = field
        self.constraint = constraint


def thread_count() -> int:
    raw = os.environ.get("FRACQM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map(tasks):
    """Run zero-argument callables; results keep the input order."""
    workers = min(thread_count(), max(1, len(tasks)))
    if workers == 1:
        return [t() for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda t: t(), tasks))


def _cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return repr(v) if not math.isfinite(v) else format(v, ".17g")
    return str(v)


def _json_default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, np.bool_):
        return bool(o)
    if isinstance(o, complex):
        return [o.real, o.imag]
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


# --------------------------------------------------------------------------
# parameter access

def _get(params, key, default=_REQUIRED):
    if key in params:
        return params[key]
    if default is _REQUIRED:
        raise ConfigError(key, "required")
    return default


def _real(params, key, default=_REQUIRED, positive=False, lo=None, hi=None, lo_open=True):
    v = _get(params, key, default)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(key, f"must be a number, got {v!r}")
    v = float(v)
    if not math.isfinite(v):
        raise ConfigError(key, "must be finite")
    if positive and not v > 0:
        raise ConfigError(key, "must be positive")
    if lo is not None and (v <= lo if lo_open else v < lo):
        raise ConfigError(key, f"must be {'>' if lo_open else '>='} {lo}")
    if hi is not None and v > hi:
        raise ConfigError(key, f"must be <= {hi}")
    return v


def _complex(params, key, default=_REQUIRED):
    v = _get(params, key, default)
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(
            isinstance(u, (int, float)) and not isinstance(u, bool) for u in v):
        return complex(v[0], v[1])
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    raise ConfigError(key, "must be a number or a [re, im] pair")


def _int_list(params, key, default=_REQUIRED):
    v = _get(params, key, default)
    v = v if isinstance(v, list) else [v]
    if not v or not all(isinstance(u, int) and not isinstance(u, bool) and u >= 1 for u in v):
        raise ConfigError(key, "must be a positive integer or a non-empty list of them")
    return v


def _real_list(params, key, default=_REQUIRED):
    v = _get(params, key, default)
    v = v if isinstance(v, list) else [v]
    if not v or not all(isinstance(u, (int, float)) and not isinstance(u, bool) for u in v):
        raise ConfigError(key, "must be a number or a non-empty list of numbers")
    return [float(u) for u in v]


def _grid(params, key, grid_key):
    """Explicit list under ``key`` or ``{start, stop, count}`` under ``grid_key``."""
    if key in params:
        return _real_list(params, key)
    if grid_key in params:
        g = params[grid_key]
        if not isinstance(g, dict):
            raise ConfigError(grid_key, "must be an object {start, stop, count}")
        start = _real(g, "start")
        stop = _real(g, "stop")
        count = _get(g, "count")
        if not isinstance(count, int) or isinstance(count, bool) or count < 1:
            raise ConfigError(f"{grid_key}.count", "must be a positive integer")
        return [float(u) for u in np.linspace(start, stop, count)]
    raise ConfigError(key, f"required (or give {grid_key})")


def _tol(params, default):
    return _real(params, "tol", default, positive=True)


def _well_spec(params, beta_default=1.5):
    try:
        return well.WellSpec(a=_real(params, "a", 1.0, positive=True),
                             beta=_real(params, "beta", beta_default, lo=1.0, hi=2.0),
                             D_beta=_real(params, "D", 1.0, positive=True),
                             hbar=_real(params, "hbar", 1.0, positive=True),
                             mass=_real(params, "m", 1.0, positive=True))
    except FracQMError as exc:
        raise ConfigError("parameters", str(exc)) from exc


# --------------------------------------------------------------------------
# experiment kinds; each prepare() validates everything and returns a plan

class Plan:
    def __init__(self, tasks, columns, to_row, converged, summarize=None):
        self.tasks = tasks
        self.columns = columns
        self.to_row = to_row
        self.converged = converged
        self.summarize = summarize or (lambda results: {})


def _prepare_well_consistency(params):
    spec = _well_spec(params)
    ns = _int_list(params, "n")
    alphas = _real_list(params, "alpha")
    for a in alphas:
        if not (a == 0 or 0 < a <= 2):
            raise ConfigError("alpha", "each value must be 0 or lie in (0, 2]")
    xs = _grid(params, "xs", "x_grid")
    if any(not abs(x) < spec.a for x in xs):
        raise ConfigError("xs", "every point must satisfy |x| < a")
    tol = _tol(params, 1e-9)
    refine = _get(params, "check_refinement", True)
    if not isinstance(refine, bool):
        raise ConfigError("check_refinement", "must be true or false")
    tasks = [
        (lambda n=n, al=al, x=x: well.recovery_point(spec, n, al, x, tol, refine))
        for al in alphas for n in ns for x in xs
    ]

    def summarize(rows):
        rep = well.ConsistencyReport(spec, list(rows), tol)
        d = rep.to_dict()
        d.pop("rows")
        return d

    return Plan(tasks, well.CSV_COLUMNS, lambda r: [getattr(r, c) for c in well.CSV_COLUMNS],
                lambda r: r.converged, summarize)


def _prepare_effective_potential(params):
    spec = _well_spec(params)
    ns = _int_list(params, "n")
    points = _get(params, "grid_points", 0)
    if not isinstance(points, int) or isinstance(points, bool) or (points and points < 64):
        raise ConfigError("grid_points", "must be 0 (skip the grid check) or an integer >= 64")

    def task(n):
        v = well.effective_potential_well(spec, n)
        dev = math.nan
        if points:
            st = well.eigenstate(spec, n, form="sin_shifted")
            X = GridFunction.sample(st, -spec.a, spec.a, points)
            prof = well.effective_potential_general(X, st.energy, spec)
            dev = float(np.max(np.abs(prof.interior() - v)))
        return n, spec.energy(n), v, dev

    cols = ("n", "energy", "veff", "grid_max_deviation", "converged")
    return Plan([lambda n=n: task(n) for n in ns], cols,
                lambda r: [*r, True], lambda r: True)


def _prepare_free_particle(params):
    try:
        p = freeparticle.FracParams(alpha=_real(params, "alpha", 1.0),
                                    beta=_real(params, "beta", 2.0),
                                    D_check=_real(params, "D", 0.5, positive=True),
                                    hbar=_real(params, "hbar", 1.0, positive=True),
                                    psi0=_complex(params, "psi0", 1.0))
    except FracQMError as exc:
        raise ConfigError("parameters", str(exc)) from exc
    xs = _grid(params, "xs", "x_grid")
    ts = _real_list(params, "ts", [1.0])
    if any(not t > 0 for t in ts):
        raise ConfigError("ts", "times must be positive")
    methods = _get(params, "methods", ["momentum_integral", "foxh"])
    if not isinstance(methods, list) or not methods:
        raise ConfigError("methods", "must be a non-empty list")
    for m in methods:
        if m not in freeparticle.METHODS:
            raise ConfigError("methods", f"unknown method {m!r}; choose from {freeparticle.METHODS}")
        if m.startswith("foxh") and any(x == 0 for x in xs):
            raise ConfigError("xs", f"method {m!r} needs x != 0")
        if m in ("foxh_h1232", "foxh_h2012", "foxh_h1011") and p.beta != 2:
            raise ConfigError("methods", f"{m!r} needs beta = 2")
        if m in ("foxh_space", "foxh_space_alt") and p.alpha != 1:
            raise ConfigError("methods", f"{m!r} needs alpha = 1")
        if m == "gaussian" and (p.alpha != 1 or p.beta != 2):
            raise ConfigError("methods", "'gaussian' needs alpha = 1 and beta = 2")
    tol = _tol(params, 1e-10)
    tasks = [(lambda x=x, t=t, m=m: freeparticle.evaluate(p, x, t, m, tol))
             for t in ts for x in xs for m in methods]

    def to_row(s):
        return [s.alpha, s.beta, s.x, s.t, s.method, s.value.real, s.value.imag, s.err,
                s.converged]

    return Plan(tasks, freeparticle.CSV_COLUMNS, to_row, lambda s: s.converged)


def _foxh_params(spec, field="params"):
    if not isinstance(spec, dict):
        raise ConfigError(field, "must be an object with m, n, upper, lower")
    try:
        kw = dict(spec)
        for k in ("scale", "pf_coef"):
            if k in kw:
                kw[k] = _complex(kw, k)
        return foxh.FoxHParams(**kw)
    except (TypeError, FracQMError) as exc:
        raise ConfigError(field, str(exc)) from exc


def _specfun_task(item, idx):
    field = f"evaluations[{idx}]"
    if not isinstance(item, dict):
        raise ConfigError(field, "must be an object")
    fn = item.get("function")
    z = _complex(item, "z")
    tol = _tol(item, 1e-10)
    if fn == "ml":
        alpha = _real(item, "alpha", positive=True)
        return lambda: _wrap(lambda: mittag_leffler(alpha, z, tol))
    if fn == "gamma":
        return lambda: _wrap_value(lambda: gamma_complex(z), "lanczos")
    if fn == "loggamma":
        return lambda: _wrap_value(lambda: loggamma(z), "lanczos")
    if fn == "foxh":
        h = _foxh_params(item.get("params"), f"{field}.params")
        method = item.get("method", "contour")
        if method not in ("contour", "series", "both"):
            raise ConfigError(f"{field}.method", "must be contour, series or both")
        cfg = foxh.MellinBarnesConfig(target_abs_err=tol)
        return lambda: _wrap(lambda: foxh.foxh_eval(h, z, cfg, method))
    raise ConfigError(f"{field}.function", "must be ml, gamma, loggamma or foxh")


def _wrap(fn):
    """(value, err, converged, method, message) from an EvalResult-returning call."""
    try:
        r = fn()
        return complex(r.value), float(r.abs_err), bool(r.converged), r.method, ""
    except FracQMError as exc:
        return complex(math.nan, math.nan), math.inf, False, "", str(exc)


def _wrap_value(fn, method):
    try:
        return complex(fn()), 0.0, True, method, ""
    except FracQMError as exc:
        return complex(math.nan, math.nan), math.inf, False, method, str(exc)


def _prepare_specfun_eval(params):
    items = _get(params, "evaluations")
    if not isinstance(items, list) or not items:
        raise ConfigError("evaluations", "must be a non-empty list")
    tasks = [_specfun_task(it, i) for i, it in enumerate(items)]
    cols = ("index", "function", "arguments", "re", "im", "err", "method", "converged", "message")

    def to_row(pair):
        i, (v, e, c, m, msg) = pair
        args = json.dumps(items[i], sort_keys=True, separators=(",", ":"))
        return [i, items[i]["function"], args, v.real, v.imag, e, m, c, msg]

    indexed = [(lambda i=i, t=t: (i, t())) for i, t in enumerate(tasks)]
    return Plan(indexed, cols, to_row, lambda pair: pair[1][2])


def pv_problem(power: float, poles, oscillation) -> quadrature.PVProblem:
    """``|q|^power * sum(oscillation) / prod(q - pole)`` as a principal-value problem."""
    terms = tuple(quadrature.OscTerm(float(c), float(w), k) for c, w, k in oscillation)
    if power == 0:
        smooth = np.ones_like
    else:
        def smooth(q):
            return np.abs(q) ** power
    return quadrature.PVProblem(smooth, tuple(float(p) for p in poles), terms,
                                power - len(poles), (0.0,) if power else ())


def _pv_spec(item, field):
    if not isinstance(item, dict):
        raise ConfigError(field, "must be an object")
    power = _real(item, "power", 0.0, lo=-1.0)
    poles = _real_list(item, "poles", [-1.0, 1.0])
    osc = item.get("oscillation", [[1.0, 1.0, "cos"]])
    if not isinstance(osc, list) or not osc:
        raise ConfigError(f"{field}.oscillation", "must be a non-empty list of [coef, frequency, kind]")
    for o in osc:
        if (not isinstance(o, list) or len(o) != 3 or o[2] not in ("cos", "sin", "exp")
                or not all(isinstance(u, (int, float)) for u in o[:2])):
            raise ConfigError(f"{field}.oscillation",
                              "entries must be [coef, frequency, 'cos'|'sin'|'exp']")
    if power - len(poles) > 0:
        raise ConfigError(f"{field}.power", "power minus the pole count must be <= 0")
    try:
        return pv_problem(power, poles, osc)
    except FracQMError as exc:
        raise ConfigError(field, str(exc)) from exc


def _prepare_pv_eval(params):
    items = _get(params, "integrals")
    if not isinstance(items, list) or not items:
        raise ConfigError("integrals", "must be a non-empty list")
    tol = _tol(params, 1e-10)
    probs = [_pv_spec(it, f"integrals[{i}]")
             for i, it in enumerate(items)]
    tasks = [(lambda i=i, pr=pr: (i, _wrap(lambda: _pv_as_eval(pr, tol))))
             for i, pr in enumerate(probs)]
    cols = ("index", "arguments", "re", "im", "err", "converged", "message")

    def to_row(pair):
        i, (v, e, c, _m, msg) = pair
        return [i, json.dumps(items[i], sort_keys=True, separators=(",", ":")),
                v.real, v.imag, e, c, msg]

    return Plan(tasks, cols, to_row, lambda pair: pair[1][2])


class _AsEval:
    def __init__(self, q):
        self.value = q.value
        self.abs_err = q.abs_err_estimate
        self.converged = q.converged
        self.method = "pv"


def _pv_as_eval(prob, tol):
    return _AsEval(quadrature.pv_integrate(prob, tol))


def _prepare_validate_suite(params):
    names = _get(params, "checks", None)
    known = [c.__name__.removeprefix("check_") for c in validation.CHECKS]
    if names is not None:
        if not isinstance(names, list) or any(n not in known for n in names):
            raise ConfigError("checks", f"must be a list drawn from {known}")
    selected = [c for c in validation.CHECKS
                if names is None or c.__name__.removeprefix("check_") in names]
    tasks = [(lambda c=c: validation.run_suite([c.__name__.removeprefix("check_")])[0])
             for c in selected]
    cols = ("check", "passed", "measured", "threshold")

    def summarize(results):
        return {"checks": [r.to_dict() for r in results],
                "all_passed": all(r.passed for r in results)}

    return Plan(tasks, cols, lambda r: [r.name, r.passed, r.measured, r.threshold],
                lambda r: r.passed, summarize)


KINDS = {
    "well_consistency": _prepare_well_consistency,
    "effective_potential": _prepare_effective_potential,
    "free_particle": _prepare_free_particle,
    "specfun_eval": _prepare_specfun_eval,
    "pv_eval": _prepare_pv_eval,
    "validate_suite": _prepare_validate_suite,
}


def load_config(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError("config", f"cannot read {path}: {exc.strerror}") from exc
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("config", f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config", "top level must be an object")
    kind = cfg.get("kind")
    if kind not in KINDS:
        raise ConfigError("kind", f"must be one of {sorted(KINDS)}")
    params = cfg.get("parameters", {})
    if not isinstance(params, dict):
        raise ConfigError("parameters", "must be an object")
    return cfg


def run(config_path, output=None) -> int:
    """Execute one experiment config; returns the exit code."""
    try:
        cfg = load_config(config_path)
        params = cfg.get("parameters", {})
        plan = KINDS[cfg["kind"]](params)
        out = output or cfg.get("output") or params.get("output")
        if out is None:
            p = Path(config_path)
            out = p.with_name(p.stem + "_report")
        out = Path(out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    results = _map(plan.tasks)
    flags = [bool(plan.converged(r)) for r in results]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(plan.columns)
    for r in results:
        w.writerow([_cell(v) for v in plan.to_row(r)])
    out.parent.mkdir(parents=True, exist_ok=True)
    csv_path = out.with_name(out.name + ".csv")
    json_path = out.with_name(out.name + ".json")
    csv_path.write_text(buf.getvalue())
    summary = {
        "version": __version__,
        "kind": cfg["kind"],
        "inputs": cfg,
        "rows": len(results),
        "converged": flags,
        "all_converged": all(flags),
        "csv": csv_path.name,
        **plan.summarize(results),
    }
    json_path.write_text(json.dumps(summary, indent=2, default=_json_default) + "\n")
    bad = flags.count(False)
    print(f"{cfg['kind']}: {len(results)} rows, {bad} not converged -> {csv_path}")
    return EXIT_OK if bad == 0 else EXIT_CONVERGENCE


# --------------------------------------------------------------------------
# point evaluations

def _print_result(value, err, converged, method, as_json):
    value, err, converged = complex(value), float(err), bool(converged)
    if as_json:
        v = value.real if value.imag == 0 else {"re": value.real, "im": value.imag}
        print(json.dumps({"value": v, "err": err, "converged": converged, "method": method},
                         default=_json_default))
    else:
        text = repr(value.real) if value.imag == 0 else repr(value)
        flag = "" if converged else " (not converged)"
        print(f"{text} {err!r}{flag}")
    return EXIT_OK if converged else EXIT_CONVERGENCE


def _eval(args) -> int:
    kind = args.what
    if kind == "ml":
        r = mittag_leffler(args.alpha, complex(args.re, args.im), args.tol)
        return _print_result(r.value, r.abs_err, r.converged, r.method, args.json)
    if kind == "gamma":
        return _print_result(gamma_complex(complex(args.re, args.im)), 0.0, True, "lanczos",
                             args.json)
    if kind == "foxh":
        src = args.params
        try:
            spec = json.loads(Path(src).read_text()) if Path(src).is_file() else json.loads(src)
        except json.JSONDecodeError as exc:
            raise ConfigError("--params", f"line {exc.lineno}, column {exc.colno}: {exc.msg}")
        h = _foxh_params(spec, "--params")
        cfg = foxh.MellinBarnesConfig(target_abs_err=args.tol)
        r = foxh.foxh_eval(h, complex(args.z, args.im), cfg, args.method)
        return _print_result(r.value, r.abs_err, r.converged, r.method, args.json)
    if kind == "pv":
        poles = [float(u) for u in args.poles.split(",") if u.strip()]
        prob = _pv_spec({"power": args.power, "poles": poles,
                         "oscillation": [[1.0, args.freq, args.kind]]}, "flags")
        r = quadrature.pv_integrate(prob, args.tol)
        return _print_result(r.value, r.abs_err_estimate, r.converged, "pv", args.json)
    if kind in ("energy", "veff"):
        spec = well.WellSpec(a=args.a, beta=args.beta, D_beta=args.d, hbar=args.hbar,
                             mass=getattr(args, "m", 1.0))
        v = spec.energy(args.n) if kind == "energy" else well.effective_potential_well(spec, args.n)
        return _print_result(v, 0.0, True, "closed_form", args.json)
    if kind == "psi":
        p = freeparticle.FracParams(args.alpha, args.beta, args.d, args.hbar, 1.0)
        if args.method not in freeparticle.METHODS:
            raise ConfigError("--method", f"choose from {freeparticle.METHODS}")
        s = freeparticle.evaluate(p, args.x, args.t, args.method, args.tol)
        return _print_result(s.value, s.err, s.converged, s.method, args.json)
    raise ConfigError("eval", f"unknown subcommand {kind!r}")


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the configuration-error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="fracqm", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"fracqm {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("run", help="execute a JSON experiment config")
    r.add_argument("config")
    r.add_argument("--output", help="output path prefix (default: <config>_report)")

    e = sub.add_parser("eval", help="evaluate a single quantity")
    es = e.add_subparsers(dest="what", required=True, parser_class=_Parser)

    def leaf(name, help_):
        p = es.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = leaf("ml", "Mittag-Leffler E_alpha(z)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-10)

    p = leaf("gamma", "complex gamma function")
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)

    p = leaf("foxh", "Fox H-function")
    p.add_argument("--params", required=True, help="JSON file or inline JSON object")
    p.add_argument("--z", type=float, required=True, help="real part of the argument")
    p.add_argument("--im", type=float, default=0.0)
    p.add_argument("--method", choices=("contour", "series", "both"), default="contour")
    p.add_argument("--tol", type=float, default=1e-12)

    p = leaf("pv", "principal value of |q|^power cos(freq q) / prod(q - pole)")
    p.add_argument("--poles", default="-1,1", help="comma list; write --poles=-1,1")
    p.add_argument("--power", type=float, default=0.0)
    p.add_argument("--freq", type=float, default=1.0)
    p.add_argument("--kind", choices=("cos", "sin", "exp"), default="cos")
    p.add_argument("--tol", type=float, default=1e-10)

    for name, help_ in (("energy", "well energy level"), ("veff", "well effective potential")):
        p = leaf(name, help_)
        p.add_argument("--a", type=float, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--beta", type=float, required=True)
        p.add_argument("--d", type=float, required=True)
        p.add_argument("--hbar", type=float, default=1.0)
        if name == "veff":
            p.add_argument("--m", type=float, required=True)

    p = leaf("psi", "free-particle wavefunction")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--d", type=float, default=0.5)
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--method", default="momentum_integral")
    p.add_argument("--tol", type=float, default=1e-10)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return run(args.config, args.output)
        return _eval(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NonConvergenceError as exc:
        print(f"not converged: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except FracQMError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
