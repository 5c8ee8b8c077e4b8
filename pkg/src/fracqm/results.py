"""Result containers shared by the evaluation routines."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class EvalResult:
    """A computed value with an absolute error estimate."""

    value: complex
    abs_err: float
    converged: bool = True
    method: str = ""
    diagnostics: dict = field(default_factory=dict, compare=False)

    def __complex__(self):
        return complex(self.value)

    @property
    def real(self) -> float:
        return complex(self.value).real

    @property
    def imag(self) -> float:
        return complex(self.value).imag


@dataclass(frozen=True)
class QuadResult:
    """Outcome of a quadrature call.

    ``refinement_levels`` is the deepest bisection level (or acceleration
    step count for tail sums) reached while meeting the tolerance.
    """

    value: complex
    abs_err_estimate: float
    refinement_levels: int
    converged: bool
    diagnostics: dict = field(default_factory=dict, compare=False)

    def __add__(self, other: "QuadResult") -> "QuadResult":
        diag = {"pieces": self.diagnostics.get("pieces", 1) + other.diagnostics.get("pieces", 1)}
        return QuadResult(
            self.value + other.value,
            self.abs_err_estimate + other.abs_err_estimate,
            max(self.refinement_levels, other.refinement_levels),
            self.converged and other.converged,
            diag,
        )

    def scaled(self, c: complex) -> "QuadResult":
        return QuadResult(self.value * c, self.abs_err_estimate * abs(c),
                          self.refinement_levels, self.converged, self.diagnostics)
