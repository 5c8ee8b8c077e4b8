"""Exception hierarchy."""


class FracQMError(Exception):
    """Base class for all library errors."""


class PoleOfGammaError(FracQMError, ValueError):
    """Gamma evaluated at a non-positive integer."""


class GammaOverflowError(FracQMError, OverflowError):
    """Gamma value not representable in double precision."""


class InvalidParametersError(FracQMError, ValueError):
    """An H-function parameter set violates a structural constraint."""


class ConstraintViolationError(FracQMError, ValueError):
    """A transform was requested outside its domain of validity."""


class ContourPlacementError(FracQMError, ValueError):
    """No vertical line separates the two pole families."""


class PoleTooCloseError(FracQMError, ValueError):
    """Two principal-value poles fall inside one exclusion window."""


class NonAlternatingError(FracQMError, ArithmeticError):
    """Half-period contributions of an oscillatory tail do not alternate."""


class OutOfDomainError(FracQMError, ValueError):
    """Evaluation point outside the sampled domain."""


class NonConvergenceError(FracQMError, ArithmeticError):
    """An iterative evaluation failed to reach its target accuracy.

    ``diagnostics`` carries whatever the failing routine knew at the time
    (best value, error estimate, worst subinterval, iteration counts).
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})
