"""Gamma function on the complex plane (Lanczos/Stirling with reflection)."""
import math

import numpy as np

from ..errors import GammaOverflowError, PoleOfGammaError
from ..kernels import cloggamma

_LOG_MAX = math.log(np.finfo(float).max)


def _is_pole(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def loggamma(z):
    """Complex log-gamma on an array (branch unspecified; use via ``exp``).

    Non-positive integers map to ``+inf``.
    """
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    return cloggamma(np.ascontiguousarray(z.ravel())).reshape(z.shape)


def gamma_complex(z) -> complex:
    """Gamma(z) for complex z.

    Real arguments go through :func:`math.gamma`. Complex arguments use a
    Lanczos (g=7) sum, a Stirling series for ``|z| >= 10`` and the reflection
    formula for ``Re z < 1/2``.

    Raises
    ------
    PoleOfGammaError
        ``z`` is a non-positive integer.
    GammaOverflowError
        ``|Gamma(z)|`` exceeds the double range.
    """
    z = complex(z)
    if _is_pole(z):
        raise PoleOfGammaError(f"gamma has a pole at z={z.real:g}")
    if z.imag == 0.0:
        try:
            return complex(math.gamma(z.real))
        except OverflowError as exc:
            raise GammaOverflowError(f"gamma({z.real:g}) overflows") from exc
    lg = complex(loggamma(np.array([z]))[0])
    if lg.real > _LOG_MAX:
        raise GammaOverflowError(f"|gamma({z})| overflows")
    return complex(np.exp(lg))


def rgamma_array(z):
    """1/Gamma(z) on an array; exactly zero at the poles of Gamma."""
    z = np.asarray(z, dtype=np.complex128)
    lg = loggamma(z)
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.exp(-lg)
    out[np.isinf(lg.real) & (lg.real > 0)] = 0.0
    return out
