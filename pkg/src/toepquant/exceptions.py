"""Exception types used across the package."""


class ToepquantError(Exception):
    """Base class for all package errors."""


class InvalidDimensionError(ToepquantError, ValueError):
    """A matrix or generating vector has an unusable dimension."""


class InvalidArgumentError(ToepquantError, ValueError):
    """An argument is outside its documented range."""


class IndexOutOfRangeError(ToepquantError, IndexError):
    """An index or distance falls outside the ambient dimension."""


class DomainError(ToepquantError, ValueError):
    """A function was evaluated outside its domain."""


class NumericError(ToepquantError, ArithmeticError):
    """Non-finite values or a failed numerical routine."""


class NotARulerError(ToepquantError, ValueError):
    """An index set does not realize every pairwise distance."""

    def __init__(self, message: str, missing: list[int] | None = None):
        super().__init__(message)
        self.missing = missing or []


class NotPSDError(ToepquantError, ValueError):
    """A covariance matrix is too far from positive semidefinite."""


class MisuseError(ToepquantError, ValueError):
    """An API was called with data it is not meant for."""


class EmptyInputError(ToepquantError, ValueError):
    """An input collection or file contains no usable data."""
