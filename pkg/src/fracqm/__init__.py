"""Numerical toolkit for fractional quantum mechanics.

Fractional operators (Riesz, Caputo), Mittag-Leffler and Fox H-functions,
principal-value quadrature of singular oscillatory integrals, the
infinite-well consistency experiment and the space-time fractional free
particle.
"""
__version__ = "0.1.0"

from .errors import NonConvergenceError
from .results import EvalResult, QuadResult

__all__ = ["EvalResult", "NonConvergenceError", "QuadResult", "__version__"]
