"""Numba switch.

Kernels are compiled with numba when it is importable and ``FRACQM_NUMBA`` is
not set to ``0``. Otherwise the pure-numpy twins in :mod:`fracqm.kernels` are
used.
"""
import os

try:
    import numba as _numba
except ImportError:  # pragma: no cover
    _numba = None

USE_NUMBA = _numba is not None and os.environ.get("FRACQM_NUMBA", "1") != "0"


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise a no-op decorator."""
    if _numba is None:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f
    kwargs.setdefault("cache", True)
    return _numba.njit(*args, **kwargs)
