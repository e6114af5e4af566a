"""Custom exceptions module."""


class ForagingError(Exception):
    """Base Exception."""


# Domain errors --->

class DomainError(ForagingError, ValueError):
    """Exception raised for an argument outside its admissible range.

    Used by every operation that validates its input before computing.
    """

    def __init__(self, message: str, parameter: str | None = None, value=None):
        super().__init__(message)
        self.parameter = parameter
        self.value = value


class PoleError(DomainError):
    """Exception raised when Gamma, digamma or zeta is evaluated at a pole."""


# Numerical errors --->

class NumericalError(ForagingError):
    """Base Exception for numerical failures."""


class QuadratureError(NumericalError):
    """Exception raised when an adaptive quadrature does not converge.

    Carries the error estimate reached on the last attempt.
    """

    def __init__(
            self,
            message: str,
            abs_error: float | None = None,
            subdivisions: int | None = None,
    ):
        super().__init__(message)
        self.abs_error = abs_error
        self.subdivisions = subdivisions


class TruncationError(NumericalError):
    """Exception raised when a series tail bound exceeds its tolerance."""

    def __init__(self, message: str, tail_bound: float | None = None):
        super().__init__(message)
        self.tail_bound = tail_bound


class DivergenceError(NumericalError):
    """Exception raised for a quantity that diverges at the requested s.

    Raised by kappa_s as s approaches 1.
    """


class SolverError(NumericalError):
    """Exception raised for non-finite values met during a grid scan."""

    def __init__(self, message: str, s: float | None = None):
        super().__init__(message)
        self.s = s


INVALID_INPUT_ERRORS = (
    DomainError,
    DivergenceError,
)
