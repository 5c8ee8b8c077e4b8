"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each row reports the best wall time of both flavours on the same inputs and
the largest difference between their outputs. Compilation happens in a
warm-up call and is not timed.
"""
import argparse
import time

import numpy as np

from fracqm import kernels
from fracqm._accel import USE_NUMBA


def best_of(fn, args, repeat):
    fn(*args)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def _flat(out):
    if isinstance(out, tuple):  # (value, diagnostics...)
        return np.array([complex(out[0])])
    return np.asarray(out, dtype=complex)


def cases():
    rng = np.random.default_rng(7)
    z = rng.uniform(-30, 30, 20000) + 1j * rng.uniform(-30, 30, 20000)
    inc = np.diff(np.linspace(0, 1, 3001) ** 2)
    yield "cloggamma (20k points)", kernels.cloggamma_nb, kernels.cloggamma_np, (z,)
    yield "ml_series (alpha=0.6, z=-3+1j)", kernels.ml_series_nb, kernels.ml_series_np, \
        (0.6, -3 + 1j, 400)
    yield "ml_contour_sum (4001 nodes)", kernels.ml_contour_sum_nb, kernels.ml_contour_sum_np, \
        (0.6, -8 + 2j, 4.0, 0.01, 2000)
    yield "l1_history (3000 steps)", kernels.l1_history_nb, kernels.l1_history_np, (inc, 0.5)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not USE_NUMBA:
        print("note: FRACQM_NUMBA=0, the *_nb kernels run as plain python")
    print(f"{'kernel':34s} {'numba [ms]':>11s} {'numpy [ms]':>11s} {'speedup':>8s} {'max diff':>10s}")
    for name, nb, npf, a in cases():
        t_nb, o_nb = best_of(nb, a, args.repeat)
        t_np, o_np = best_of(npf, a, args.repeat)
        diff = np.max(np.abs(_flat(o_nb) - _flat(o_np)) / np.maximum(1.0, np.abs(_flat(o_np))))
        print(f"{name:34s} {1e3 * t_nb:11.3f} {1e3 * t_np:11.3f} {t_np / t_nb:8.1f} {diff:10.1e}")


if __name__ == "__main__":
    main()
