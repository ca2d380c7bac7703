"""Exception hierarchy for lerchlab."""


class LerchLabError(Exception):
    """Base class for all lerchlab errors."""


class DomainError(LerchLabError, ValueError):
    """Arguments outside the domain of validity of the requested routine."""


class NonConvergenceError(LerchLabError):
    """A series or transform failed to reach the target tolerance."""

    def __init__(self, message, value=None, error_estimate=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class AccelerationFailureError(NonConvergenceError):
    """Sequence transforms did not stabilize below the target tolerance."""


class DegenerateParameterError(LerchLabError):
    """Parameters hit a pole / vanishing-basis configuration; the caller
    should switch basis or avoid the point."""


class LatticePointError(DomainError):
    """Evaluation requested on (or too close to) a discontinuity line of a
    twisted-periodic function."""


class UnknownRelationError(LerchLabError, KeyError):
    """Requested an operator relation that is not part of the verified set."""


class IdentityViolationError(LerchLabError):
    """A candidate function failed a structural identity it was required to
    satisfy (e.g. the Fourier-coefficient constancy test)."""

    def __init__(self, message, deviation=None):
        super().__init__(message)
        self.deviation = deviation
